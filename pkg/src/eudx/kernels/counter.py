"""Per-invocation operation counters.

Every kernel accepts an optional ``OpCounter`` owned by the caller; there
is no global state.  Counts are grouped under the five building blocks
(multiply, decompose, inverse, transpose, substitute) so the offload
scheduler can estimate accelerator time from per-block coefficients, plus
named tags for finer-grained assertions.
"""

from dataclasses import dataclass, field

BLOCKS = ("multiply", "decompose", "inverse", "transpose", "substitute")


@dataclass
class OpCounter:
    flops: dict = field(default_factory=dict)
    tags: dict = field(default_factory=dict)
    bytes_in: int = 0
    bytes_out: int = 0

    def add(self, block, n):
        self.flops[block] = self.flops.get(block, 0) + int(n)

    def tag(self, name, n):
        self.tags[name] = self.tags.get(name, 0) + int(n)

    def count_input(self, *arrays):
        for a in arrays:
            self.bytes_in += a.nbytes

    def count_output(self, *arrays):
        for a in arrays:
            self.bytes_out += a.nbytes

    def total_flops(self):
        return sum(self.flops.values())

    def block_flops(self, block):
        return self.flops.get(block, 0)
