"""Module decompositions in the Specht basis.

``SchurVector`` holds S_n multiplicities keyed by partitions of n;
``BipartiteDecomposition`` holds S_k x S_m multiplicities keyed by pairs.
Both keep exact ints, drop zeros, and iterate in canonical partition order.
"""

from .partitions import format_partition, parse_partition, partition_index
from .tableaux import syt_count


class SchurVector:
    """An S_n module (or virtual module) as ``{partition: multiplicity}``."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        index = partition_index(n)
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if lam not in index:
                raise ValueError(f"{lam} is not a partition of {n}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.n = n
        self.coeffs = {lam: clean[lam] for lam in sorted(clean, key=index.__getitem__) if clean[lam]}

    def __getitem__(self, lam):
        return self.coeffs.get(tuple(lam), 0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other):
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, tuple(self.coeffs.items())))

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"weights differ: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.items():
            out[lam] = out.get(lam, 0) + c
        return SchurVector(self.n, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar):
        return SchurVector(self.n, {lam: scalar * c for lam, c in self.items()})

    __rmul__ = __mul__

    @property
    def is_module(self):
        """True when every multiplicity is nonnegative."""
        return all(c >= 0 for c in self.coeffs.values())

    def contains(self, other):
        """Multiplicity-wise containment of ``other`` in ``self``."""
        self._check(other)
        return all(self[lam] >= c for lam, c in other.items())

    def dimension(self):
        return sum(c * syt_count(lam) for lam, c in self.items())

    def to_json(self):
        return {"n": self.n, "coeffs": {format_partition(lam): c for lam, c in self.items()}}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], {parse_partition(k): v for k, v in data["coeffs"].items()})

    def __repr__(self):
        terms = " + ".join(f"{c}*s{format_partition(lam)}" for lam, c in self.items())
        return f"SchurVector({self.n}: {terms or '0'})"


class BipartiteDecomposition:
    """An S_k x S_m module as ``{(mu, lam): multiplicity}`` of S^mu (x) S^lam."""

    __slots__ = ("k", "m", "coeffs")

    def __init__(self, k, m, coeffs=None):
        idx_k, idx_m = partition_index(k), partition_index(m)
        clean = {}
        for (mu, lam), c in (coeffs or {}).items():
            mu, lam = tuple(mu), tuple(lam)
            if mu not in idx_k or lam not in idx_m:
                raise ValueError(f"({mu}, {lam}) is not a pair of partitions of ({k}, {m})")
            if c:
                clean[mu, lam] = clean.get((mu, lam), 0) + c
        order = sorted(clean, key=lambda p: (idx_k[p[0]], idx_m[p[1]]))
        self.k, self.m = k, m
        self.coeffs = {p: clean[p] for p in order if clean[p]}

    def __getitem__(self, pair):
        mu, lam = pair
        return self.coeffs.get((tuple(mu), tuple(lam)), 0)

    def items(self):
        return self.coeffs.items()

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BipartiteDecomposition):
            return NotImplemented
        return (self.k, self.m, self.coeffs) == (other.k, other.m, other.coeffs)

    def __add__(self, other):
        if (self.k, self.m) != (other.k, other.m):
            raise ValueError("weights differ")
        out = dict(self.coeffs)
        for p, c in other.items():
            out[p] = out.get(p, 0) + c
        return BipartiteDecomposition(self.k, self.m, out)

    def row(self, mu):
        """The S_m module multiplying S^mu in the first factor."""
        mu = tuple(mu)
        return SchurVector(self.m, {lam: c for (nu, lam), c in self.items() if nu == mu})

    @property
    def is_module(self):
        return all(c >= 0 for c in self.coeffs.values())

    def dimension(self):
        return sum(c * syt_count(mu) * syt_count(lam) for (mu, lam), c in self.items())

    def to_json(self):
        return {
            "k": self.k,
            "m": self.m,
            "coeffs": [
                {"mu": format_partition(mu), "lambda": format_partition(lam), "c": c}
                for (mu, lam), c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data):
        coeffs = {
            (parse_partition(e["mu"]), parse_partition(e["lambda"])): e["c"] for e in data["coeffs"]
        }
        return cls(data["k"], data["m"], coeffs)

    def __repr__(self):
        terms = " + ".join(
            f"{c}*{format_partition(mu)}x{format_partition(lam)}" for (mu, lam), c in self.items()
        )
        return f"BipartiteDecomposition({self.k},{self.m}: {terms or '0'})"
