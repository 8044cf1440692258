"""8-bit grayscale image I/O (PGM P5, PNG) and sampling helpers."""

import numpy as np

from ..errors import InvalidParams


def write_pgm(path, img):
    img = np.asarray(img)
    if img.dtype != np.uint8 or img.ndim != 2:
        raise InvalidParams("need a 2-D uint8 image")
    h, w = img.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        f.write(img.tobytes())


def read_pgm(path):
    with open(path, "rb") as f:
        data = f.read()
    if not data.startswith(b"P5"):
        raise InvalidParams(f"{path}: not a binary PGM")
    # header: magic, width, height, maxval, separated by whitespace/comments
    fields = []
    i = 2
    while len(fields) < 3:
        while i < len(data) and data[i:i + 1].isspace():
            i += 1
        if data[i:i + 1] == b"#":
            while i < len(data) and data[i] != 0x0A:
                i += 1
            continue
        j = i
        while j < len(data) and not data[j:j + 1].isspace():
            j += 1
        fields.append(int(data[i:j]))
        i = j
    w, h, maxval = fields
    if maxval != 255:
        raise InvalidParams(f"{path}: only 8-bit PGM supported")
    i += 1  # single whitespace after maxval
    pixels = np.frombuffer(data[i:i + w * h], dtype=np.uint8)
    if pixels.size != w * h:
        raise InvalidParams(f"{path}: truncated pixel data")
    return pixels.reshape(h, w).copy()


def read_image(path):
    path = str(path)
    if path.lower().endswith(".pgm"):
        return read_pgm(path)
    from PIL import Image as PilImage
    img = PilImage.open(path).convert("L")
    return np.asarray(img, dtype=np.uint8).copy()


def bilinear_sample(img, ys, xs):
    """Sample float image at fractional coordinates (clamped to borders)."""
    h, w = img.shape
    ys = np.clip(ys, 0.0, h - 1.000001)
    xs = np.clip(xs, 0.0, w - 1.000001)
    y0 = np.floor(ys).astype(np.int64)
    x0 = np.floor(xs).astype(np.int64)
    fy = ys - y0
    fx = xs - x0
    top = img[y0, x0] * (1 - fx) + img[y0, x0 + 1] * fx
    bot = img[y0 + 1, x0] * (1 - fx) + img[y0 + 1, x0 + 1] * fx
    return top * (1 - fy) + bot * fy
