"""Read access to batched path buffers during an Euler run."""

import numpy as np

from sbihari.exceptions import ArgumentError
from sbihari.objects import CadlagPath


class PathView:
    """The paths of a batch stopped at node k.

    Coefficients of the SDE receive a PathView: `current` is the value at
    node k (the left-limit value used on the cell (t_k, t_{k+1}]) and no
    node after k can be read.

    Args:
        buffer: Array (batch, n_init - 1 + K + 1, d) holding the initial
            segment followed by the nodes 0..K.
        offset: Buffer index of node 0.
        k: The stopping node.
        step: Grid step.
    """

    def __init__(self, buffer: np.ndarray, offset: int, k: int, step: float):
        self._buffer = buffer
        self._offset = offset
        self.k = k
        self.step = step

    @classmethod
    def from_path(cls, path: CadlagPath, k: int = None) -> "PathView":
        """A single-trial view of a CadlagPath stopped at node k (default: last node)."""
        buffer = np.concatenate([path.init_segment[:-1], path.values])[None, :, :]
        k = path.n_steps if k is None else k
        if not 0 <= k <= path.n_steps:
            raise ArgumentError(f"node {k} outside the path")
        return cls(buffer, path.init_segment.shape[0] - 1, k, path.step)

    @property
    def time(self) -> float:
        return self.k * self.step

    @property
    def batch(self) -> int:
        return int(self._buffer.shape[0])

    @property
    def d(self) -> int:
        return int(self._buffer.shape[2])

    @property
    def current(self) -> np.ndarray:
        """Values at node k, shape (batch, d)."""
        return self._buffer[:, self._offset + self.k]

    def node(self, j: int) -> np.ndarray:
        """Values at node j <= k (negative j reads the initial segment).

        Raises:
            ArgumentError: If j > k or j precedes the initial segment.
        """
        if j > self.k:
            raise ArgumentError(f"node {j} lies after the stopping node {self.k}")
        if self._offset + j < 0:
            raise ArgumentError(f"node {j} precedes the initial segment")
        return self._buffer[:, self._offset + j]

    @property
    def segment(self) -> np.ndarray:
        """All readable values (initial segment and nodes 0..k), shape (batch, ., d)."""
        return self._buffer[:, : self._offset + self.k + 1]

    def history_sup(self, length: float) -> np.ndarray:
        """max |x(s)| over the nodes in [t - length, t - step], shape (batch,).

        The current node is excluded; nodes before 0 come from the initial
        segment. Returns zeros when the window holds no node.
        """
        n_back = int(round(length / self.step))
        hi = self._offset + self.k
        lo = max(0, hi - n_back)
        if lo >= hi:
            return np.zeros(self.batch)
        return np.max(np.linalg.norm(self._buffer[:, lo:hi], axis=2), axis=1)

    def __repr__(self):
        return f"PathView(batch={self.batch}, k={self.k}, step={self.step})"


def running_sup(path: CadlagPath, t: float, from_minus_r: bool = False) -> float:
    """max |X| over the grid nodes in [0, t] ([-r, t] with from_minus_r).

    Raises:
        ArgumentError: If t is beyond the path horizon.
    """
    return path.running_sup(t, from_minus_r)
