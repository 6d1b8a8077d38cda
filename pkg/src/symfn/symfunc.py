"""Symmetric functions over the exact coefficient field.

A SymFunc is a sparse partition-indexed coefficient map tagged with the basis
it is written in:

* ``p`` -- power sums, the canonical internal basis (the deformed scalar
  product is diagonal there and products are key unions);
* ``q`` -- deformed complete functions, one per part, multiplied together;
* ``m`` -- monomial symmetric functions.

The deformation is an EpsSequence ``n -> eps_n``: the scalar product is
``<p_lam, p_mu> = delta_{lam,mu} * eps_lam * z_lam`` and the degree-n
deformed complete function is ``sum over lam of n : p_lam / (z_lam *
eps_lam)``.  The presets ones/jack/hl/macdonald/abc cover the Schur, Jack,
Hall-Littlewood, Macdonald and three-parameter cases.

Per-degree transition matrices (p <-> m, q -> p) are built once and then
reused; first access may duplicate work across threads but a cache entry is
only published as a complete immutable object.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from . import _diskcache
from .coeffs import ONE, ZERO, Coeff, sym
from .partitions import EMPTY, Partition, dominance_geq, partition_index, partitions_of, union, z_lambda
from .report import Report, failing, passing

BASES = ("p", "q", "m")


# ---------------------------------------------------------------------------
# Deformation sequences
# ---------------------------------------------------------------------------


class EpsSequence:
    """Rule n -> eps_n in the coefficient field, with eps_0 = 1.

    Values must be nonzero; this is checked lazily as indices are used.
    """

    def __init__(self, rule: Callable[[int], Coeff], name: str = "custom", cache_key: str | None = None):
        self._rule = rule
        self.name = name
        self.cache_key = cache_key
        self.mem_key = cache_key or f"custom-{id(self):x}"
        self._memo: dict[int, Coeff] = {0: ONE}

    def __call__(self, n: int) -> Coeff:
        if n < 0:
            raise ValueError("eps is indexed by non-negative integers")
        v = self._memo.get(n)
        if v is None:
            v = Coeff._coerce(self._rule(n))
            if v.is_zero():
                raise ValueError(f"eps_{n} vanishes for sequence {self.name!r}")
            self._memo[n] = v
        return v

    def eps_lambda(self, lam: Partition) -> Coeff:
        out = ONE
        for part in lam:
            out = out * self(part)
        return out

    def __repr__(self) -> str:
        return f"EpsSequence({self.name})"


_b, _c, _q, _t, _alpha = sym("b"), sym("c"), sym("q"), sym("t"), sym("alpha")
_a = sym("a")

EPS_ONES = EpsSequence(lambda n: ONE, "ones", "ones")
EPS_JACK = EpsSequence(lambda n: _alpha, "jack", "jack")
EPS_HL = EpsSequence(lambda n: 1 / (1 - _t**n), "hall_littlewood", "hl")
EPS_MACDONALD = EpsSequence(lambda n: (1 - _q**n) / (1 - _t**n), "macdonald", "macdonald")
EPS_ABC = EpsSequence(lambda n: (_b**n - 1) / (_c**n * (1 - _a**n)), "abc", "abc")

PRESETS: dict[str, EpsSequence] = {
    "ones": EPS_ONES,
    "jack": EPS_JACK,
    "hl": EPS_HL,
    "hall_littlewood": EPS_HL,
    "macdonald": EPS_MACDONALD,
    "abc": EPS_ABC,
}


def eps_preset(name: str) -> EpsSequence:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown eps preset {name!r}; choose from ones|jack|hl|macdonald|abc") from None


# ---------------------------------------------------------------------------
# SymFunc values
# ---------------------------------------------------------------------------


def _as_partition(key) -> Partition:
    return key if isinstance(key, Partition) else Partition(key)


class SymFunc:
    """Sparse map partition -> coefficient in a tagged basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, terms: Mapping | None = None, basis: str = "p"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[Partition, Coeff] = {}
        if terms:
            for k, v in terms.items():
                cv = Coeff._coerce(v)
                if cv.is_zero():
                    continue
                clean[_as_partition(k)] = cv
        self.basis = basis
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(basis: str = "p") -> "SymFunc":
        return SymFunc({}, basis)

    @staticmethod
    def one(basis: str = "p") -> "SymFunc":
        return SymFunc({EMPTY: ONE}, basis)

    @staticmethod
    def p(parts) -> "SymFunc":
        """Power sum p_lam for a partition, or p_n for an integer n >= 1."""
        if isinstance(parts, int):
            parts = (parts,)
        return SymFunc({Partition(sorted(parts, reverse=True)): ONE}, "p")

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {lam.weight for lam in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree undefined: zero or inhomogeneous")
        return degs.pop()

    def homogeneous_component(self, d: int) -> "SymFunc":
        return SymFunc({k: v for k, v in self.terms.items() if k.weight == d}, self.basis)

    # -- linear structure -------------------------------------------------

    def _check_basis(self, other: "SymFunc"):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_basis(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, ZERO) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        res = SymFunc.zero(self.basis)
        res.terms = out
        return res

    def __neg__(self) -> "SymFunc":
        res = SymFunc.zero(self.basis)
        res.terms = {k: -v for k, v in self.terms.items()}
        return res

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = Coeff._coerce(c)
        res = SymFunc.zero(self.basis)
        if not c.is_zero():
            res.terms = {k: v * c for k, v in self.terms.items()}
        return res

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, (Coeff, int)):
            return self.scale(other)
        self._check_basis(other)
        if self.basis == "m":
            raise ValueError("products are defined in the multiplicative bases p and q")
        out: dict[Partition, Coeff] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = union(k1, k2)
                s = out.get(k, ZERO) + v1 * v2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        res = SymFunc.zero(self.basis)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymFunc)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    # -- presentation -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Partition, Coeff]]:
        """Terms sorted by weight, then by the fixed enumeration order."""
        def key(item):
            lam = item[0]
            return (lam.weight, partition_index(lam.weight)[lam])

        return sorted(self.terms.items(), key=key)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": lam.to_json(), "coeff": c.to_json()}
                for lam, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(obj: Mapping) -> "SymFunc":
        terms = {
            Partition(entry["partition"]): Coeff.from_json(entry["coeff"])
            for entry in obj["terms"]
        }
        return SymFunc(terms, obj["basis"])

    def __repr__(self) -> str:
        if not self.terms:
            return "SymFunc(0)"
        bits = [f"({c})*{self.basis}[{lam.text()}]" for lam, c in self.sorted_terms()]
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Deformed complete functions
# ---------------------------------------------------------------------------

_QEXP: dict[tuple[str, int], SymFunc] = {}
_QLAM: dict[tuple[str, Partition], SymFunc] = {}


def q_eps(n: int, eps: EpsSequence) -> SymFunc:
    """Degree-n deformed complete function expanded in power sums.

    Zero for n < 0, one for n = 0, otherwise the sum of p_lam / (z_lam *
    eps_lam) over partitions of n.
    """
    if n < 0:
        return SymFunc.zero()
    key = (eps.mem_key, n)
    hit = _QEXP.get(key)
    if hit is not None:
        return hit
    terms = {
        lam: 1 / (eps.eps_lambda(lam) * z_lambda(lam))
        for lam in partitions_of(n)
    }
    out = SymFunc(terms, "p")
    _QEXP[key] = out
    return out


def q_eps_lambda(lam: Partition, eps: EpsSequence) -> SymFunc:
    """Product of deformed complete functions over the parts of lam."""
    lam = _as_partition(lam)
    key = (eps.mem_key, lam)
    hit = _QLAM.get(key)
    if hit is not None:
        return hit
    out = SymFunc.one()
    for part in lam:
        out = out * q_eps(part, eps)
    _QLAM[key] = out
    return out


# ---------------------------------------------------------------------------
# Monomial symmetric functions and transition matrices
# ---------------------------------------------------------------------------

_P2M: dict[int, dict[Partition, dict[Partition, int]]] = {}
_M2P: dict[int, dict[Partition, dict[Partition, Coeff]]] = {}


def _mult_m_by_p(expansion: dict[Partition, int], k: int) -> dict[Partition, int]:
    """Multiply an m-basis integer expansion by the power sum p_k."""
    out: dict[Partition, int] = {}
    for mu, c in expansion.items():
        seen: set[Partition] = set()
        # append a new part k
        nu = union(mu, Partition((k,)))
        out[nu] = out.get(nu, 0) + c * nu.multiplicity(k)
        seen.add(nu)
        # add k onto one existing distinct part value
        for d in set(mu):
            parts = list(mu)
            parts.remove(d)
            parts.append(d + k)
            nu = Partition(sorted(parts, reverse=True))
            if nu in seen:
                continue
            seen.add(nu)
            out[nu] = out.get(nu, 0) + c * nu.multiplicity(d + k)
    return {k_: v for k_, v in out.items() if v}


def _p_to_m(n: int) -> dict[Partition, dict[Partition, int]]:
    hit = _P2M.get(n)
    if hit is not None:
        return hit
    data = _diskcache.load("p2m", "z", n)
    if data is not None:
        out = {
            Partition(lam): {Partition(mu): int(v) for mu, v in row}
            for lam, row in data
        }
        _P2M[n] = out
        return out
    out = {}
    for lam in partitions_of(n):
        expansion: dict[Partition, int] = {EMPTY: 1}
        for part in lam:
            expansion = _mult_m_by_p(expansion, part)
        out[lam] = expansion
    _P2M[n] = out
    _diskcache.store(
        "p2m", "z", n,
        [[lam.to_json(), [[mu.to_json(), v] for mu, v in row.items()]] for lam, row in out.items()],
    )
    return out


def _m_to_p(n: int) -> dict[Partition, dict[Partition, Coeff]]:
    hit = _M2P.get(n)
    if hit is not None:
        return hit
    data = _diskcache.load("m2p", "z", n)
    if data is not None:
        out = {
            Partition(lam): {
                Partition(mu): Coeff.parse(num) / Coeff.parse(den) for mu, num, den in row
            }
            for lam, row in data
        }
        _M2P[n] = out
        return out
    p2m = _p_to_m(n)
    out = {}
    # p_mu = sum over nu <= mu (in the enumeration order) of B[mu][nu] m_nu
    # with nonzero diagonal, so substitute already-solved m's going down.
    for mu in partitions_of(n):
        row = p2m[mu]
        acc: dict[Partition, Coeff] = {mu: ONE}
        for nu, bcoef in row.items():
            if nu == mu:
                continue
            solved = out[nu]
            for rho, c in solved.items():
                s = acc.get(rho, ZERO) - c * bcoef
                if s.is_zero():
                    acc.pop(rho, None)
                else:
                    acc[rho] = s
        diag = Coeff.from_int(row[mu])
        out[mu] = {rho: c / diag for rho, c in acc.items()}
    _M2P[n] = out
    _diskcache.store(
        "m2p", "z", n,
        [
            [lam.to_json(), [[mu.to_json(), c.to_json()["num"], c.to_json()["den"]] for mu, c in row.items()]]
            for lam, row in out.items()
        ],
    )
    return out


def monomial(lam: Partition) -> SymFunc:
    """Monomial symmetric function m_lam expanded in power sums."""
    lam = _as_partition(lam)
    if not lam:
        return SymFunc.one()
    return SymFunc(_m_to_p(lam.weight)[lam], "p")


# ---------------------------------------------------------------------------
# Basis conversions
# ---------------------------------------------------------------------------


def to_p(f: SymFunc, eps: EpsSequence | None = None) -> SymFunc:
    """Rewrite f in the power-sum basis (q-basis input needs eps)."""
    if f.basis == "p":
        return f
    out = SymFunc.zero()
    if f.basis == "m":
        for lam, c in f.terms.items():
            out = out + monomial(lam).scale(c)
        return out
    if eps is None:
        raise ValueError("converting from the q basis requires an eps sequence")
    for lam, c in f.terms.items():
        out = out + q_eps_lambda(lam, eps).scale(c)
    return out


def to_q(f: SymFunc, eps: EpsSequence) -> SymFunc:
    """Rewrite f in the deformed complete basis for the given eps.

    Works degree by degree: the q -> p matrix is triangular with respect to
    the fixed enumeration order, so a forward substitution suffices.
    """
    fp = to_p(f, eps)
    out: dict[Partition, Coeff] = {}
    for d in sorted(fp.degrees()):
        comp = {k: v for k, v in fp.terms.items() if k.weight == d}
        for lam in partitions_of(d):
            fval = comp.get(lam)
            if fval is None:
                continue
            col = q_eps_lambda(lam, eps).terms
            x = fval / col[lam]
            out[lam] = x
            for mu, a in col.items():
                s = comp.get(mu, ZERO) - x * a
                if s.is_zero():
                    comp.pop(mu, None)
                else:
                    comp[mu] = s
        if comp:
            raise ArithmeticError("q-basis conversion did not close; eps degenerate?")
    return SymFunc(out, "q")


def to_m(f: SymFunc, eps: EpsSequence | None = None) -> SymFunc:
    """Rewrite f in the monomial basis.

    The m-coefficient at mu is the pairing of f with the undeformed complete
    function of shape mu, by duality.
    """
    fp = to_p(f, eps)
    out: dict[Partition, Coeff] = {}
    for lam2 in list(fp.degrees()):
        for mu in partitions_of(lam2):
            c = inner(fp.homogeneous_component(lam2), q_eps_lambda(mu, EPS_ONES), EPS_ONES)
            if not c.is_zero():
                out[mu] = c
    return SymFunc(out, "m")


# ---------------------------------------------------------------------------
# The deformed scalar product
# ---------------------------------------------------------------------------


def inner(f: SymFunc, g: SymFunc, eps: EpsSequence) -> Coeff:
    """Bilinear extension of <p_lam, p_mu> = delta * eps_lam * z_lam."""
    fp = to_p(f, eps)
    gp = to_p(g, eps)
    small, large = (fp.terms, gp.terms) if len(fp.terms) <= len(gp.terms) else (gp.terms, fp.terms)
    acc = ZERO
    for lam, cf in small.items():
        cg = large.get(lam)
        if cg is None:
            continue
        acc = acc + cf * cg * eps.eps_lambda(lam) * z_lambda(lam)
    return acc


def duality_check(n: int, eps: EpsSequence) -> Report:
    """Verify <m_mu, q_lam> = delta for all pairs of weight at most n."""
    claim = "<m_mu, q_lam> = delta(lam, mu)"
    rng = {"max_weight": n, "eps": eps.name}
    for k in range(n + 1):
        for lam in partitions_of(k):
            qcol = q_eps_lambda(lam, eps)
            for mu in partitions_of(k):
                val = inner(monomial(mu), qcol, eps)
                expected = ONE if lam == mu else ZERO
                if val != expected:
                    return failing(
                        claim, rng,
                        {"lambda": lam.to_json(), "mu": mu.to_json(), "value": val.to_json()},
                    )
    return passing(claim, rng)
