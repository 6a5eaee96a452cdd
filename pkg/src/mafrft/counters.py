"""Operation counters for verifying FFT-count and multiply-count claims.

The counters are plain module state: reset them, run the code path under
test, then read them back. They track semantic work (one count per row
transform, one count per scalar multiply of a matrix-vector product),
independent of how the numpy kernels vectorize it.
"""

from dataclasses import dataclass


@dataclass
class OpCounters:
    fft_calls: int = 0
    multiplies: int = 0

    def reset(self) -> None:
        self.fft_calls = 0
        self.multiplies = 0


counters = OpCounters()
