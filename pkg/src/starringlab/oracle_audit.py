"""Self-audits that cross-check the exact oracles against brute force.

Three independent audits, each exhaustive or seeded-deterministic:

* positive-semidefiniteness agrees with constructive sum-of-*-squares
  decomposition on every small 2x2 Hermitian matrix;
* componentwise nonnegativity of integer tuples agrees with the
  sums-of-squares witness oracle on every small tuple;
* the range projection satisfies its algebraic post-conditions on a
  seeded sample of matrices.

Each audit returns a summary dict and raises ``OracleAuditError`` on the
first discrepancy, so a failing oracle can never silently feed the law
checkers.
"""

from fractions import Fraction

from .rng import SplitMix64
from .scalars import gr
from .matrices import (
    Matrix,
    psd_test,
    sos_decomposition,
    range_projection,
    kernel_contained,
)
from .starring import IntTupleInstance, MatrixInstance


class OracleAuditError(AssertionError):
    pass


_SMALL_SCALARS = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
)


def audit_psd_sos():
    """PSD <=> sum-of-*-squares on all small 2x2 Hermitian matrices.

    Diagonal entries range over seven small rationals, the off-diagonal
    entry over all 49 small Gaussian rationals: 2401 matrices total.
    """
    checked = psd_count = 0
    for a in _SMALL_SCALARS:
        for d in _SMALL_SCALARS:
            for re_part in _SMALL_SCALARS:
                for im_part in _SMALL_SCALARS:
                    b = gr(re_part, im_part)
                    m = Matrix([[gr(a), b], [b.conj(), gr(d)]])
                    checked += 1
                    is_psd = psd_test(m)
                    terms = sos_decomposition(m)
                    if (terms is not None) != is_psd:
                        raise OracleAuditError(
                            "psd/sos disagree on %r: psd=%s sos=%s"
                            % (m, is_psd, terms is not None)
                        )
                    if terms is None:
                        continue
                    psd_count += 1
                    acc = Matrix.zero(2)
                    for t in terms:
                        acc = acc + t.star() * t
                    if acc != m:
                        raise OracleAuditError(
                            "sos terms do not sum back to %r" % (m,)
                        )
    return {"checked": checked, "psd": psd_count}


def audit_int_positivity(entry_bound=9):
    """Componentwise nonnegativity <=> four-square witness sums on tuples.

    Exhaustive over tuple lengths 1..3 with entries in [-bound, bound].
    """
    values = range(-entry_bound, entry_bound + 1)
    checked = positive = 0
    for length in (1, 2, 3):
        inst = IntTupleInstance(length)

        def tuples(k):
            if k == 0:
                yield ()
                return
            for rest in tuples(k - 1):
                for v in values:
                    yield rest + (v,)

        for a in tuples(length):
            checked += 1
            pos = inst.positivity_oracle(a)
            if pos != all(x >= 0 for x in a):
                raise OracleAuditError("positivity oracle wrong on %r" % (a,))
            witnesses = inst.star_sums_oracle(a)
            if pos != (witnesses is not None):
                raise OracleAuditError(
                    "sums-of-squares witness disagrees with positivity on %r"
                    % (a,)
                )
            if witnesses is None:
                continue
            positive += 1
            acc = inst.zero
            for w in witnesses:
                acc = inst.add(acc, inst.mul(w, w))
            if acc != a:
                raise OracleAuditError(
                    "square witnesses do not sum back to %r" % (a,)
                )
    return {"checked": checked, "positive": positive}


def audit_range_projection(samples=200, seed=2024):
    """Algebraic post-conditions of the range projection on seeded matrices.

    For each sampled matrix m of dimension 1..3: p = range_projection(m)
    must be Hermitian, idempotent, fix m on the right (m p = m), and have
    exactly the kernel of m.
    """
    gen = SplitMix64(seed)
    instances = {n: MatrixInstance(n) for n in (1, 2, 3)}
    checked = 0
    for _ in range(samples):
        n = gen.randint(1, 3)
        m = instances[n].random_element(gen)
        p = range_projection(m)
        if p != p.star():
            raise OracleAuditError("range projection not Hermitian for %r" % (m,))
        if p * p != p:
            raise OracleAuditError("range projection not idempotent for %r" % (m,))
        if m * p != m:
            raise OracleAuditError("range projection does not fix %r" % (m,))
        if not kernel_contained(m, p) or not kernel_contained(p, m):
            raise OracleAuditError("range projection kernel mismatch for %r" % (m,))
        checked += 1
    return {"checked": checked}


def run_all():
    return {
        "psdSos": audit_psd_sos(),
        "intPositivity": audit_int_positivity(),
        "rangeProjection": audit_range_projection(),
    }
