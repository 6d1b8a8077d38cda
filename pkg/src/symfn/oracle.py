"""Independent ground truth: Gram-Schmidt construction of the orthogonal bases.

For any deformation eps, orthogonalizing the monomial basis bottom-up along
the fixed (dominance-refining) enumeration order yields the generalized
Hall-Littlewood family P_lam: monic on m_lam, supported on dominated
partitions, and pairwise orthogonal.  The dual normalization Q_lam rescales
P_lam so its diagonal coefficient in the deformed complete basis is one.

This construction never touches the operator machinery, so agreement with
the eigenvector solver is a genuine two-route check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffs import ONE, Coeff
from .partitions import Partition, partitions_of
from .report import Report, failing, passing
from .symfunc import EpsSequence, SymFunc, inner, monomial, to_m, to_q


class DegenerateGramError(ValueError):
    """A Gram-Schmidt norm vanished; the form is degenerate at this eps."""


_GS: dict[tuple[str, int], dict[Partition, tuple[SymFunc, Coeff]]] = {}


def _gs_basis(n: int, eps: EpsSequence) -> dict[Partition, tuple[SymFunc, Coeff]]:
    """Orthogonal family (power-sum form, norm) for every partition of n."""
    key = (eps.mem_key, n)
    hit = _GS.get(key)
    if hit is not None:
        return hit
    out: dict[Partition, tuple[SymFunc, Coeff]] = {}
    for lam in reversed(partitions_of(n)):
        vec = monomial(lam)
        for mu, (p_mu, norm_mu) in out.items():
            coeff = inner(vec, p_mu, eps) / norm_mu
            if not coeff.is_zero():
                vec = vec - p_mu.scale(coeff)
        norm = inner(vec, vec, eps)
        if norm.is_zero():
            raise DegenerateGramError(f"degenerate Gram matrix at degree {n}, eps {eps.name}")
        out[lam] = (vec, norm)
    _GS[key] = out
    return out


@dataclass
class GHLResult:
    """Both normalizations of one orthogonal basis element.

    P is monic on m_lam; Q = P / <P, P>, rescaled so the diagonal
    coefficient in the deformed complete basis is one (``rescale`` is that
    final factor).
    """

    lam: Partition
    P: SymFunc  # monomial-basis expansion, monic at lam
    P_power: SymFunc  # the same element in the power-sum basis
    Q: SymFunc  # deformed-complete-basis expansion, diagonal one
    norm: Coeff
    rescale: Coeff

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "P": self.P.to_json(),
            "Q": self.Q.to_json(),
            "norm": self.norm.to_json(),
            "rescale": self.rescale.to_json(),
        }


def ghl_P(lam: Partition, eps: EpsSequence) -> GHLResult:
    """Orthogonal basis element attached to lam, in both normalizations."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    basis = _gs_basis(lam.weight, eps)
    vec, norm = basis[lam]
    qexp = to_q(vec, eps)
    diag = qexp.terms.get(lam)
    if diag is None:
        raise DegenerateGramError(f"vanishing diagonal coefficient at {lam}")
    rescale = norm / diag
    return GHLResult(
        lam=lam,
        P=to_m(vec),
        P_power=vec,
        Q=qexp.scale(1 / diag),
        norm=norm,
        rescale=rescale,
    )


def ghl_gram_report(n: int, eps: EpsSequence) -> Report:
    """Gram matrix of the monomial basis at degree n, the diagonal of its
    triangular factorization along the enumeration order, and pairwise
    orthogonality of the derived family."""
    claim = "<P_lam, P_mu> = 0 for lam != mu"
    rng = {"degree": n, "eps": eps.name}
    order = partitions_of(n)
    gram = [
        [inner(monomial(lam), monomial(mu), eps).to_json() for mu in order]
        for lam in order
    ]
    basis = _gs_basis(n, eps)
    diag = [basis[lam][1].to_json() for lam in order]
    unit = [
        [{"partition": mu.to_json(), "coeff": c.to_json()} for mu, c in to_m(basis[lam][0]).sorted_terms()]
        for lam in order
    ]
    data = {
        "partitions": [lam.to_json() for lam in order],
        "gram": gram,
        "ldu": {"diag": diag, "unit_lower": unit},
    }
    for i, lam in enumerate(order):
        for mu in order[i + 1 :]:
            v = inner(basis[lam][0], basis[mu][0], eps)
            if not v.is_zero():
                return failing(claim, rng, {"lambda": lam.to_json(), "mu": mu.to_json()}, **data)
    return passing(claim, rng, **data)
