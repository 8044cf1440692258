"""CSV interchange for matrix fixtures: one ``rows,cols`` header line,
then one comma-separated row per line."""

import numpy as np

from ..errors import DimMismatch


def save_matrix_csv(path, a):
    a = np.asarray(a, dtype=np.float64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    with open(path, "w") as f:
        f.write(f"{a.shape[0]},{a.shape[1]}\n")
        for row in a:
            f.write(",".join(repr(float(v)) for v in row) + "\n")


def load_matrix_csv(path):
    with open(path) as f:
        header = f.readline().strip()
        try:
            rows, cols = (int(x) for x in header.split(","))
        except ValueError:
            raise DimMismatch(f"bad matrix header: {header!r}")
        data = []
        for line in f:
            line = line.strip()
            if not line:
                continue
            data.append([float(x) for x in line.split(",")])
    a = np.array(data, dtype=np.float64)
    if a.shape != (rows, cols):
        raise DimMismatch(f"expected {rows}x{cols}, found {a.shape}")
    return a
