"""Algebraic laws of the word products and their evaluation homomorphisms."""
from itertools import combinations, product as cartesian

import numpy as np

from qzeta import LOGGER
from qzeta.algebra.powerseries import QSeries, ps_pow_one_minus_q
from qzeta.algebra.products import (ProductKind, apply_H, apply_T, lincomb_product, product, q_quasi_shuffle,
                                    q_shuffle)
from qzeta.algebra.words import LinComb, format_word, s_inverse, weight, word_stats
from qzeta.evaluator.config import Model, Pathway
from qzeta.evaluator.numeric import zeta_numeric
from qzeta.evaluator.series import eval_lincomb, word_series, zbar_series
from qzeta.identities.checks import ROUNDING, CheckReport, lincomb_check, numeric_check, series_check

MAX_TRIPLES = 200
MAX_TRIPLE_LENGTH = 9

UNGRADED = {ProductKind.Q_SHUFFLE_GRADED: ProductKind.Q_SHUFFLE,
            ProductKind.Q_QUASI_SHUFFLE_GRADED: ProductKind.Q_QUASI_SHUFFLE}


def _letters(w, kind):
    """ letter count of a word in the alphabet of kind """
    return len(w) if kind is ProductKind.SHUFFLE_X else word_stats(w)[1]


def _single(w, kind):
    return LinComb.single(w, kind=kind.alphabet)


def _first_failure(name, params, checks, unit):
    """
    Run lazily built sub-checks and stop at the first failing one

    Parameters
    ----------
    checks : iterable of (dict, callable)
     the extra parameters of each instance and the function building its report
    unit : str
     what an instance is, for the summary note
    """
    count = 0
    for extra, build in checks:
        report = build()
        count += 1
        if not report.passed:
            report.name = name
            report.params = dict(params, **extra)
            LOGGER.debug(f"{name} fails on {extra}")
            return report
    return CheckReport(name, params, True, notes=[f"{count} {unit} checked"])


def _homogeneity(u, v, kind):
    expected = weight(u) + weight(v)
    for w, c in product(u, v, kind).items():
        for e in c.exponents():
            if e + weight(w) != expected:
                witness = {"degree": e, "word": format_word(w, kind.alphabet), "lhs": str(e + weight(w)),
                           "rhs": str(expected)}
                return CheckReport("h_homogeneity", {}, False, witness=witness)
    return CheckReport("h_homogeneity", {}, True)


def _filtration(u, v, kind):
    bound = weight(u) + weight(v)
    above = [w for w in product(u, v, kind).words() if weight(w) > bound]
    if not above:
        return CheckReport("weight_filtration", {}, True)
    witness = {"degree": weight(above[0]), "word": format_word(above[0], kind.alphabet), "lhs": str(weight(above[0])),
               "rhs": str(bound)}
    return CheckReport("weight_filtration", {}, False, witness=witness)


def _t_compatibility(u, v, kind):
    graded = kind.graded
    lhs = apply_T(product(u, v, kind), h_graded=graded)
    rhs = lincomb_product(apply_T(_single(u, kind), h_graded=graded), apply_T(_single(v, kind), h_graded=graded),
                          ProductKind.QUASI_SHUFFLE)
    return lincomb_check("t_compatibility", {}, lhs, rhs.with_kind(lhs.kind))


def _h_compatibility(u, v, kind):
    lhs = apply_H(product(u, v, kind))
    rhs = lincomb_product(apply_H(_single(u, kind)), apply_H(_single(v, kind)), UNGRADED[kind])
    return lincomb_check("h_compatibility", {}, lhs, rhs.with_kind(lhs.kind))


def _triples(sample, kind, seed, max_triples):
    """ all ordered triples when there are few enough, otherwise a seeded draw of short ones """
    if len(sample) ** 3 <= max_triples:
        return list(cartesian(sample, repeat=3)), True
    rng = np.random.default_rng(seed)
    triples = []
    for _ in range(50 * max_triples):
        triple = tuple(sample[int(i)] for i in rng.integers(0, len(sample), size=3))
        if sum(_letters(w, kind) for w in triple) <= MAX_TRIPLE_LENGTH:
            triples.append(triple)
        if len(triples) == max_triples:
            break
    return triples, False


def verify_word_laws(kind, sample, seed=0, max_triples=MAX_TRIPLES):
    """
    Commutativity on every pair and associativity on triples of a word sample

    Graded kinds also check h-homogeneity and the compatibility with H_q, the
    q-quasi-shuffles the compatibility with T (T_q when graded), and the
    ungraded products the weight filtration where it applies.

    Parameters
    ----------
    kind : ProductKind or str
    sample : list of tuple
     words of the alphabet of kind
    seed : int
     drives the triple draw when the sample has more than max_triples triples
    max_triples : int

    Returns
    -------
    CheckReport
    """
    kind = kind if isinstance(kind, ProductKind) else ProductKind.from_name(kind)
    sample = [tuple(w) for w in sample]
    params = {"kind": kind.value, "sample_size": len(sample), "seed": seed}
    pairs = list(combinations(sample, 2))
    triples, exhaustive = _triples(sample, kind, seed, max_triples)

    def pair_params(u, v):
        return {"u": format_word(u, kind.alphabet), "v": format_word(v, kind.alphabet)}

    def commutes(u, v):
        return lambda: lincomb_check("commutativity", {}, product(u, v, kind), product(v, u, kind))

    def associates(u, v, w):
        def build():
            lhs = lincomb_product(product(u, v, kind), _single(w, kind), kind)
            rhs = lincomb_product(_single(u, kind), product(v, w, kind), kind)
            return lincomb_check("associativity", {}, lhs, rhs)
        return build

    parts = [
        _first_failure("commutativity", params, ((pair_params(u, v), commutes(u, v)) for u, v in pairs), "pairs"),
        _first_failure("associativity", params,
                       ((dict(pair_params(u, v), w=format_word(w, kind.alphabet)), associates(u, v, w))
                        for u, v, w in triples), "triples"),
    ]
    all_pairs = list(combinations(sample, 2)) + [(u, u) for u in sample]
    if kind.graded:
        parts.append(_first_failure("h_homogeneity", params,
                                    ((pair_params(u, v), lambda u=u, v=v: _homogeneity(u, v, kind))
                                     for u, v in all_pairs), "pairs"))
        parts.append(_first_failure("h_compatibility", params,
                                    ((pair_params(u, v), lambda u=u, v=v: _h_compatibility(u, v, kind))
                                     for u, v in all_pairs), "pairs"))
    if kind in (ProductKind.Q_QUASI_SHUFFLE, ProductKind.Q_QUASI_SHUFFLE_GRADED):
        parts.append(_first_failure("t_compatibility", params,
                                    ((pair_params(u, v), lambda u=u, v=v: _t_compatibility(u, v, kind))
                                     for u, v in all_pairs), "pairs"))
    if kind is ProductKind.Q_QUASI_SHUFFLE:
        filtered = all_pairs
    elif kind is ProductKind.Q_SHUFFLE:
        # the d-d rule raises weight, the filtration only holds away from it
        filtered = [(u, v) for u, v in all_pairs if min(u + v, default=0) >= 0]
    else:
        filtered = []
    if filtered:
        parts.append(_first_failure("weight_filtration", params,
                                    ((pair_params(u, v), lambda u=u, v=v: _filtration(u, v, kind))
                                     for u, v in filtered), "pairs"))
    notes = [] if exhaustive else [f"associativity on {len(triples)} seeded triples of at most "
                                   f"{MAX_TRIPLE_LENGTH} letters"]
    return CheckReport.combine("word_laws", params, parts, notes=notes)


# evaluation homomorphisms


def _series_cfg(cfg, model):
    return cfg.replace(model=model, q0=None)


def _classical_homomorphism(kind, u, v, params):
    as_y = s_inverse if kind is ProductKind.SHUFFLE_X else tuple
    left, right = zeta_numeric(as_y(u)), zeta_numeric(as_y(v))
    lhs = left.value * right.value
    allowance = left.tail * abs(right.value) + right.tail * abs(left.value) + left.tail * right.tail + ROUNDING
    rhs = 0.0
    for w, c in product(u, v, kind).items():
        value = zeta_numeric(as_y(w))
        rhs += float(c) * value.value
        allowance += abs(float(c)) * value.tail
    return numeric_check("homomorphism", params, lhs, rhs, allowance)


def verify_homomorphism(kind, u, v, cfg):
    """
    eval(u) eval(v) = eval(u * v) for a product kind

    * q_shuffle, q_quasi_shuffle: modified series, plus the cross relation
      eval(u ⧢ v - u ⧢- v) = 0
    * graded kinds: non modified series with h := 1 - q, plus the graded
      cross relation
    * shuffle_X, quasi_shuffle: classical values through zeta_numeric, the words
      must be convergent

    Returns
    -------
    CheckReport
    """
    kind = kind if isinstance(kind, ProductKind) else ProductKind.from_name(kind)
    u, v = tuple(u), tuple(v)
    params = {"kind": kind.value, "u": format_word(u, kind.alphabet), "v": format_word(v, kind.alphabet),
              "order": cfg.order}
    if kind in (ProductKind.SHUFFLE_X, ProductKind.QUASI_SHUFFLE):
        return _classical_homomorphism(kind, u, v, params)
    model = Model.NONMODIFIED if kind.graded else Model.MODIFIED
    series_cfg = _series_cfg(cfg, model)
    lhs = word_series(u, series_cfg) * word_series(v, series_cfg)
    rhs = eval_lincomb(product(u, v, kind), series_cfg)
    cross = eval_lincomb(q_shuffle(u, v, graded=kind.graded) - q_quasi_shuffle(u, v, graded=kind.graded), series_cfg)
    parts = [series_check("homomorphism", params, lhs, rhs),
             series_check("cross_relation", params, cross, QSeries.zero(cross.order))]
    return CheckReport.combine("homomorphism", params, parts, notes=[f"model {model.value}"])


def verify_pathways(words, cfg):
    """ direct sum and Jackson pipeline agree coefficient for coefficient on every word """
    params = {"words": len(words), "order": cfg.order}
    direct_cfg = cfg.replace(pathway=Pathway.DIRECT_SUM)
    jackson_cfg = cfg.replace(pathway=Pathway.JACKSON)

    def agree(w):
        return lambda: series_check("pathways", {}, zbar_series(w, direct_cfg), zbar_series(w, jackson_cfg))

    return _first_failure("pathways", params, (({"word": format_word(w)}, agree(w)) for w in words), "words")


def verify_zero_words(k, cfg):
    """ z̄(0, ..., 0) with k zeros equals (q / (1 - q))^k """
    lhs = zbar_series((0,) * k, cfg)
    rhs = ps_pow_one_minus_q(-k, cfg.order).shift(k)
    return series_check("zero_words", {"k": k, "order": cfg.order}, lhs, rhs)


__all__ = ["verify_word_laws", "verify_homomorphism", "verify_pathways", "verify_zero_words", "MAX_TRIPLES"]
