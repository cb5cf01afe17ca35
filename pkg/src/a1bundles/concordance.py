"""A^1-concordance of bundles on a curve: decision, certificates, replay.

On P^1 a certificate is a chain of split bundles joined by elementary moves:

* ``ExtensionMove``: a bundle ``E`` that is an extension
  ``0 -> O(-m) -> E -> Q -> 0`` is directly concordant to ``O(-m) + Q``.
* ``TwistBridgeMove``: ``O + L`` is an extension of ``L(m)`` by ``O(-m)``
  whenever ``O(m) + L(m)`` is globally generated, so the pair of summands
  ``O(-m), L(m)`` may be exchanged for ``O, L`` (with any other summands
  carried along unchanged).
* ``CongruenceMove``: a move on ``E0 -> E1`` lifts to ``S + E0 -> S + E1``.

Each move records its two endpoints, so a chain is checked link by link
before the mathematics of each move is.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from . import bundle_p1 as bp
from .bundle_p1 import SplitBundle
from .pic_group import GroupMismatchError, PicElement
from .transition_p1 import ExtClass, family, splitting_type

FORMAT = "a1cert/1"
GENERIC = "generic"


# ---------------------------------------------------------------- classes


@dataclass(frozen=True)
class BundleClass:
    """Rank and determinant: the complete concordance invariant.

    ``determinant`` is an integer degree on P^1 or a ``PicElement`` on an
    abstract curve.
    """

    rank: int
    determinant: Union[int, PicElement]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")

    @classmethod
    def of(cls, e: SplitBundle) -> "BundleClass":
        return cls(e.rank, bp.det(e))

    def __str__(self):
        return f"rank {self.rank}, det {self.determinant}"


def bundle_class(e: SplitBundle) -> BundleClass:
    return BundleClass.of(e)


def canonical_form(e: SplitBundle) -> SplitBundle:
    """``O^(n-1) + det(e)``."""
    return SplitBundle((0,) * (e.rank - 1) + (bp.det(e),))


def concordant(e: SplitBundle, f: SplitBundle) -> bool:
    return e.rank == f.rank and bp.det(e) == bp.det(f)


def concordant_classes(a: BundleClass, b: BundleClass) -> bool:
    """Concordance on an abstract curve: same rank and same determinant."""
    da, db = a.determinant, b.determinant
    if isinstance(da, PicElement) != isinstance(db, PicElement):
        raise GroupMismatchError("cannot compare a P^1 class with an abstract-curve class")
    if isinstance(da, PicElement) and da.group != db.group:
        raise GroupMismatchError(f"{da.group} vs {db.group}")
    return a.rank == b.rank and da == db


# ------------------------------------------------------------------ moves


@dataclass(frozen=True)
class ExtensionMove:
    """``middle ~ sub + quotient`` where ``sub = O(-m)`` is a line subbundle.

    ``direction="split"`` goes from the middle term to the split sum,
    ``"merge"`` the other way.  ``ext_class`` is an explicit witness or
    ``"generic"`` (a generic section of ``middle(m)``).
    """

    source: SplitBundle
    target: SplitBundle
    sub: SplitBundle
    quotient: SplitBundle
    m: int
    direction: str = "split"
    ext_class: Union[ExtClass, str] = GENERIC
    kind = "extension"

    @property
    def middle(self) -> SplitBundle:
        return self.source if self.direction == "split" else self.target

    @property
    def split_side(self) -> SplitBundle:
        return self.target if self.direction == "split" else self.source


@dataclass(frozen=True)
class TwistBridgeMove:
    """Exchange summands ``O(-m), L(m)`` for ``O, L`` (``forward``) or back."""

    source: SplitBundle
    target: SplitBundle
    m: int
    line: int
    direction: str = "forward"
    ext_class: Union[ExtClass, str] = GENERIC
    kind = "twist_bridge"

    @property
    def twisted_pair(self) -> SplitBundle:
        return SplitBundle((-self.m, self.line + self.m))

    @property
    def untwisted_pair(self) -> SplitBundle:
        return SplitBundle((0, self.line))


@dataclass(frozen=True)
class CongruenceMove:
    source: SplitBundle
    target: SplitBundle
    common: SplitBundle
    inner: "Move"
    kind = "congruence"


Move = Union[ExtensionMove, TwistBridgeMove, CongruenceMove]


@dataclass(frozen=True)
class ConcordanceCertificate:
    endpoints: tuple[SplitBundle, SplitBundle]
    moves: tuple[Move, ...] = ()

    def bundles(self) -> list[SplitBundle]:
        """The chain ``source_0, target_0, target_1, ...``."""
        if not self.moves:
            return [self.endpoints[0]]
        return [self.moves[0].source] + [mv.target for mv in self.moves]

    def to_json(self, **kw) -> str:
        return json.dumps(certificate_to_dict(self), **kw)

    @classmethod
    def from_json(cls, text: str) -> "ConcordanceCertificate":
        return certificate_from_dict(json.loads(text))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Optional[str] = None
    move_index: Optional[int] = None
    malformed: bool = False
    details: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        where = "" if self.move_index is None else f" (move {self.move_index})"
        tag = "malformed chain" if self.malformed else "invalid move"
        return f"{tag}{where}: {self.reason}"


# ------------------------------------------------------------ generation


def rank2_extension_witness(sub: SplitBundle, quotient: SplitBundle, middle: SplitBundle) -> Optional[ExtClass]:
    """A class in Ext^1(O(b), O(a)) whose extension has splitting type ``middle``.

    The monomial class ``t^(c-b)`` with ``a < c < b`` gives the cocycle
    ``[[t^a, t^c], [0, t^b]]`` of type ``{c, a+b-c}``; the zero class gives
    ``{a, b}``.  Returns None when ``middle`` is not such an extension.
    """
    if sub.rank != 1 or quotient.rank != 1 or middle.rank != 2:
        return None
    (a,), (b,) = sub.degrees, quotient.degrees
    if bp.det(middle) != a + b:
        return None
    if middle == SplitBundle((a, b)):
        return ExtClass(sub, quotient)
    for c in middle.degrees:
        if a < c < b:
            return ExtClass(sub, quotient, {(0, 0, c - b): 1})
    return None


def _quotient_after_section(e: SplitBundle, m: int) -> SplitBundle:
    # (s^p, t^q, 0, ...) is a nowhere-vanishing section of O(p) + O(q) + ...
    # when p, q >= 0; the quotient of O(p) + O(q) by it is O(p + q).
    d = e.degrees
    return SplitBundle((d[0] + d[1] + m,) + d[2:])


def _extension_move(e: SplitBundle, m: int, explicit: bool) -> ExtensionMove:
    sub = SplitBundle.line(-m)
    q = _quotient_after_section(e, m)
    witness: Union[ExtClass, str] = GENERIC
    if explicit and e.rank == 2:
        witness = rank2_extension_witness(sub, q, e) or GENERIC
    return ExtensionMove(e, sub + q, sub, q, m, "split", witness)


def _bridge_move(source: SplitBundle, m: int, line: int, explicit: bool) -> TwistBridgeMove:
    pair = SplitBundle((-m, line + m))
    target = _exchange(source, pair, SplitBundle((0, line)))
    witness: Union[ExtClass, str] = GENERIC
    if explicit:
        witness = rank2_extension_witness(
            SplitBundle.line(-m), SplitBundle.line(line + m), SplitBundle((0, line))
        ) or GENERIC
    return TwistBridgeMove(source, target, m, line, "forward", witness)


def _exchange(e: SplitBundle, old: SplitBundle, new: SplitBundle) -> SplitBundle:
    """Replace the summands ``old`` of ``e`` by ``new``."""
    rest = Counter(e.degrees)
    rest.subtract(old.degrees)
    if any(v < 0 for v in rest.values()):
        raise ValueError(f"{old} is not a summand of {e}")
    return SplitBundle(list(rest.elements()) + list(new.degrees))


def _lift(move: Move, common: SplitBundle) -> CongruenceMove:
    if isinstance(move, CongruenceMove):
        common = common + move.common
        move = move.inner
    return CongruenceMove(move.source + common, move.target + common, common, move)


def _generate_moves(e: SplitBundle, explicit: bool) -> list[Move]:
    if e.rank == 1:
        return []
    L = bp.det(e)
    m = bp.min_gg_twist(e)
    ext = _extension_move(e, m, explicit)
    moves: list[Move] = [ext]
    sub = ext.sub
    if e.rank > 2:
        moves += [_lift(mv, sub) for mv in _generate_moves(ext.quotient, explicit)]
    here = moves[-1].target
    moves.append(_bridge_move(here, m, L, explicit))
    return moves


def generate_certificate(e: SplitBundle, explicit: bool = True) -> ConcordanceCertificate:
    """Certificate that ``e`` is concordant to ``canonical_form(e)``.

    With ``m = min_gg_twist(e)``: split off ``O(-m)`` by an extension move,
    recurse on the rank ``n-1`` quotient (lifted by congruence under
    ``O(-m)``), then trade ``O(-m) + L(m)`` for ``O + L``.  Rank-2 steps carry
    explicit Ext classes when ``explicit`` is set.
    """
    moves = _generate_moves(e, explicit)
    return ConcordanceCertificate((e, canonical_form(e)), tuple(moves))


def certificate_between(e: SplitBundle, f: SplitBundle) -> Optional[ConcordanceCertificate]:
    """Chain ``e -> canonical <- f``, or None if the bundles are not concordant."""
    if not concordant(e, f):
        return None
    forward = generate_certificate(e).moves
    back = tuple(reversed([reverse_move(mv) for mv in generate_certificate(f).moves]))
    return ConcordanceCertificate((e, f), forward + back)


def reverse_move(mv: Move) -> Move:
    if isinstance(mv, ExtensionMove):
        d = "merge" if mv.direction == "split" else "split"
        return ExtensionMove(mv.target, mv.source, mv.sub, mv.quotient, mv.m, d, mv.ext_class)
    if isinstance(mv, TwistBridgeMove):
        d = "backward" if mv.direction == "forward" else "forward"
        return TwistBridgeMove(mv.target, mv.source, mv.m, mv.line, d, mv.ext_class)
    return CongruenceMove(mv.target, mv.source, mv.common, reverse_move(mv.inner))


# ----------------------------------------------------------- verification


def _check_fibers(c: ExtClass, split: SplitBundle, middle: SplitBundle) -> Optional[str]:
    at0 = splitting_type(family(c, 0))
    if at0 != split:
        return f"family fiber at 0 is {at0}, expected {split}"
    at1 = splitting_type(family(c, 1))
    if at1 != middle:
        return f"family fiber at 1 is {at1}, expected {middle}"
    return None


def _check_move(mv: Move) -> Optional[str]:
    if mv.source.rank != mv.target.rank:
        return f"rank mismatch: {mv.source.rank} vs {mv.target.rank}"
    if bp.det(mv.source) != bp.det(mv.target):
        return f"determinant mismatch: {bp.det(mv.source)} vs {bp.det(mv.target)}"

    if isinstance(mv, ExtensionMove):
        if mv.direction not in ("split", "merge"):
            return f"unknown direction {mv.direction!r}"
        if mv.split_side != mv.sub + mv.quotient:
            return f"split side {mv.split_side} is not {mv.sub} + {mv.quotient}"
        middle = mv.middle
        if mv.sub != SplitBundle.line(-mv.m):
            return f"sub-bundle legality: sub {mv.sub} is not O({-mv.m})"
        if not bp.globally_generated(bp.twist(middle, mv.m)):
            return f"sub-bundle legality: {middle} twisted by {mv.m} is not globally generated"
        if middle.rank < 2 and middle != mv.sub:
            return "sub-bundle legality: a line bundle has no proper line subbundle"
        if isinstance(mv.ext_class, ExtClass):
            c = mv.ext_class
            if (c.sub, c.quotient) != (mv.sub, mv.quotient):
                return "attached Ext class does not match sub/quotient"
            err = _check_fibers(c, mv.split_side, middle)
            if err:
                return err
        return None

    if isinstance(mv, TwistBridgeMove):
        if mv.direction not in ("forward", "backward"):
            return f"unknown direction {mv.direction!r}"
        if mv.m < 0 or mv.line + mv.m < 0:
            return f"bridge legality: O({mv.m}) + O({mv.line + mv.m}) is not globally generated"
        before, after = mv.twisted_pair, mv.untwisted_pair
        if mv.direction == "backward":
            before, after = after, before
        if not mv.source.contains(before):
            return f"bridge: {before} is not a summand of {mv.source}"
        expected = _exchange(mv.source, before, after)
        if expected != mv.target:
            return f"bridge: target should be {expected}"
        if isinstance(mv.ext_class, ExtClass):
            c = mv.ext_class
            if (c.sub, c.quotient) != (SplitBundle.line(-mv.m), SplitBundle.line(mv.line + mv.m)):
                return "attached Ext class does not match the bridge sequence"
            err = _check_fibers(c, mv.twisted_pair, mv.untwisted_pair)
            if err:
                return err
        return None

    if isinstance(mv, CongruenceMove):
        if mv.source != mv.inner.source + mv.common or mv.target != mv.inner.target + mv.common:
            return f"congruence: endpoints are not the inner move plus {mv.common}"
        return _check_move(mv.inner)

    return f"unknown move {mv!r}"


def verify_certificate(c: ConcordanceCertificate) -> Verdict:
    """Replay ``c``; return the first broken link or invalid move."""
    start, end = c.endpoints
    if not c.moves:
        if start != end:
            return Verdict(False, f"empty chain but endpoints differ: {start} vs {end}", None, True)
        return Verdict(True)
    if c.moves[0].source != start:
        return Verdict(False, f"first move starts at {c.moves[0].source}, not {start}", 0, True)
    for i, (a, b) in enumerate(zip(c.moves, c.moves[1:])):
        if a.target != b.source:
            return Verdict(False, f"move ends at {a.target} but next starts at {b.source}", i + 1, True)
    if c.moves[-1].target != end:
        return Verdict(False, f"last move ends at {c.moves[-1].target}, not {end}", len(c.moves) - 1, True)
    for i, mv in enumerate(c.moves):
        err = _check_move(mv)
        if err:
            return Verdict(False, err, i, False)
    return Verdict(True)


# ---------------------------------------------------------- serialization


class CertificateFormatError(ValueError):
    pass


def _ext_to_json(c):
    if not isinstance(c, ExtClass):
        return c
    return {
        "sub": list(c.sub.degrees),
        "quotient": list(c.quotient.degrees),
        "coefficients": [str(x) for x in c.coefficients],
    }


def _ext_from_json(d):
    if d is None or d == GENERIC:
        return GENERIC
    return ExtClass(d["sub"], d["quotient"], [Fraction(x) for x in d["coefficients"]])


def move_to_dict(mv: Move) -> dict:
    out = {"kind": mv.kind, "from": list(mv.source.degrees), "to": list(mv.target.degrees)}
    if isinstance(mv, ExtensionMove):
        out.update(
            sub=list(mv.sub.degrees),
            quotient=list(mv.quotient.degrees),
            m=mv.m,
            direction=mv.direction,
            extClass=_ext_to_json(mv.ext_class),
        )
    elif isinstance(mv, TwistBridgeMove):
        out.update(
            m=mv.m,
            line=mv.line,
            sub=[-mv.m],
            quotient=[mv.line + mv.m],
            direction=mv.direction,
            extClass=_ext_to_json(mv.ext_class),
        )
    else:
        out.update(commonSummand=list(mv.common.degrees), inner=move_to_dict(mv.inner))
    return out


def move_from_dict(d: dict) -> Move:
    try:
        src, tgt = SplitBundle(d["from"]), SplitBundle(d["to"])
        kind = d["kind"]
        if kind == "extension":
            return ExtensionMove(
                src, tgt, SplitBundle(d["sub"]), SplitBundle(d["quotient"]), int(d["m"]),
                d.get("direction", "split"), _ext_from_json(d.get("extClass")),
            )
        if kind == "twist_bridge":
            return TwistBridgeMove(
                src, tgt, int(d["m"]), int(d["line"]), d.get("direction", "forward"),
                _ext_from_json(d.get("extClass")),
            )
        if kind == "congruence":
            return CongruenceMove(src, tgt, SplitBundle(d["commonSummand"]), move_from_dict(d["inner"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(f"bad move record {d!r}: {exc}") from exc
    raise CertificateFormatError(f"unknown move kind {d.get('kind')!r}")


def certificate_to_dict(c: ConcordanceCertificate) -> dict:
    return {
        "format": FORMAT,
        "endpoints": [list(c.endpoints[0].degrees), list(c.endpoints[1].degrees)],
        "moves": [move_to_dict(mv) for mv in c.moves],
    }


def certificate_from_dict(d: dict) -> ConcordanceCertificate:
    if d.get("format") != FORMAT:
        raise CertificateFormatError(f"expected format {FORMAT!r}, got {d.get('format')!r}")
    try:
        a, b = d["endpoints"]
        ends = (SplitBundle(a), SplitBundle(b))
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(f"bad endpoints: {exc}") from exc
    return ConcordanceCertificate(ends, tuple(move_from_dict(m) for m in d.get("moves", [])))
