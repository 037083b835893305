"""Upper bounds for rational LS-category and topological complexity.

For an elliptic model of constant differential length l the category bound
is dim V^odd + (l-2)*dim V^even; at l = 2 this reduces to dim V^odd.  The
topological-complexity bound is 2*cat + chi_pi, which at l = 2 collapses to
the generator count dim V.  These are upper bounds only and every number in
a report carries a provenance tag naming the result it instantiates.

Zero differentials have no length; an all-zero differential is treated as
coformal (l = 2), which is the only value consistent with the even part
being empty whenever such a model is elliptic.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ellipticity import is_elliptic, is_elliptic_pure
from .errors import (
    EvenMismatch,
    NonConstantLength,
    NotClosedUnderDifferential,
    NotElliptic,
    NotPure,
    SubModelNotClosed,
    SubModelNotPure,
    VerificationFailed,
)
from .model import SullivanModel

# provenance tags are schema constants consumed by downstream tooling
TAG_CAT_COFORMAL = "coformal"
TAG_CAT_CONSTANT_LENGTH = "lechuga-murillo"
TAG_TC_PURE = "thm-3.1"
TAG_TC_COFORMAL = "cor-3.2"
TAG_TC_EXTENSION = "thm-3.3"
TAG_TC_EXTENSION_COFORMAL = "cor-3.5"


@dataclass
class BoundReport:
    """Category and topological-complexity upper bounds with provenance."""

    model: str
    chi_pi: int
    cat_value: int | None = None
    cat_provenance: str | None = None
    tc_upper: int | None = None
    tc_provenance: str | None = None
    applicability_notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out: dict = {"model": self.model, "chi_pi": self.chi_pi,
                     "applicability_notes": list(self.applicability_notes)}
        if self.cat_value is not None:
            out["cat_value"] = {"value": self.cat_value,
                                "provenance": self.cat_provenance}
        if self.tc_upper is not None:
            out["tc_upper"] = {"value": self.tc_upper,
                               "provenance": self.tc_provenance}
        return out


def _resolved_length(model: SullivanModel, notes: list[str] | None = None) -> int:
    length = model.differential_length()
    if length.kind == "constant":
        return length.value
    if length.kind == "zero":
        if notes is not None:
            notes.append(
                "all differentials vanish; treated as coformal (length 2)")
        return 2
    raise NonConstantLength(
        f"model {model.name!r} has differential length {length.render()}")


def cat_estimate(model: SullivanModel) -> int:
    """Category upper bound for an elliptic constant-length model.

    dim V^odd + (l-2)*dim V^even; the model does not have to be pure.
    """
    model.validate()
    l = _resolved_length(model)
    if not is_elliptic(model):
        raise NotElliptic(f"model {model.name!r} is not elliptic")
    return len(model.odd_generators) + (l - 2) * len(model.even_generators)


def tc_upper_bound(model: SullivanModel) -> BoundReport:
    """Topological-complexity upper bound 2*cat + chi_pi for pure models.

    At length 2 the value provably equals the generator count; that identity
    is re-checked and the coformal tag is used.
    """
    model.validate()
    if not model.is_pure():
        raise NotPure(f"model {model.name!r} is not pure")
    notes: list[str] = []
    l = _resolved_length(model, notes)
    if not is_elliptic_pure(model):
        raise NotElliptic(f"model {model.name!r} is not elliptic")
    cat = len(model.odd_generators) + (l - 2) * len(model.even_generators)
    chi = model.chi_pi()
    tc = 2 * cat + chi
    report = BoundReport(model.name, chi, cat_value=cat,
                         tc_upper=tc, applicability_notes=notes)
    report.cat_provenance = TAG_CAT_COFORMAL if l == 2 else TAG_CAT_CONSTANT_LENGTH
    if l == 2:
        if tc != model.dim_v():
            raise VerificationFailed(
                "coformal bound does not equal the generator count")
        report.tc_provenance = TAG_TC_COFORMAL
        notes.append(f"coformal: bound equals dim V = {tc}")
    else:
        report.tc_provenance = TAG_TC_PURE
    if chi < -cat:
        notes.append("bound is below the category estimate (chi_pi < -cat)")
    return report


def tc_upper_bound_nonpure(model: SullivanModel, pure_sub) -> BoundReport:
    """Topological-complexity bound routed through a pure elliptic sub-model.

    The sub-model spanned by ``pure_sub`` must be closed under the
    differential, pure, elliptic, and contain every even generator.  The
    bound itself is 2*cat + chi_pi of the full model.
    """
    model.validate()
    try:
        sub = model.sub_model(pure_sub, name=f"{model.name}/pure-part")
    except NotClosedUnderDifferential as ex:
        raise SubModelNotClosed(str(ex)) from ex
    if not sub.is_pure():
        raise SubModelNotPure(
            f"sub-model on {sorted(g.name for g in sub.generators)} is not pure")
    if set(sub.even_generators) != set(model.even_generators):
        missing = {g.name for g in model.even_generators} - {
            g.name for g in sub.even_generators}
        raise EvenMismatch(
            f"sub-model misses even generators {sorted(missing)}")
    if not is_elliptic_pure(sub):
        raise NotElliptic(f"pure sub-model of {model.name!r} is not elliptic")
    notes = [
        "pure sub-model on {%s}: closed under d, pure, elliptic, "
        "full even part" % ", ".join(g.name for g in sub.generators)
    ]
    l = _resolved_length(model, notes)
    if not is_elliptic(model):
        raise NotElliptic(f"model {model.name!r} is not elliptic")
    cat = len(model.odd_generators) + (l - 2) * len(model.even_generators)
    chi = model.chi_pi()
    tc = 2 * cat + chi
    report = BoundReport(model.name, chi, cat_value=cat,
                         tc_upper=tc, applicability_notes=notes)
    report.cat_provenance = TAG_CAT_COFORMAL if l == 2 else TAG_CAT_CONSTANT_LENGTH
    if l == 2:
        if tc != model.dim_v():
            raise VerificationFailed(
                "coformal bound does not equal the generator count")
        report.tc_provenance = TAG_TC_EXTENSION_COFORMAL
        notes.append(f"coformal: bound equals dim V = {tc}")
    else:
        report.tc_provenance = TAG_TC_EXTENSION
    if chi < -cat:
        notes.append("bound is below the category estimate (chi_pi < -cat)")
    return report
