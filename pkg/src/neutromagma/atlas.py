"""Atlas generation: one classification record per family member, with a
footer cross-checking member counts against the closed-form class sizes.

Every flag is computed by a direct engine call on the member's table; no
formula shortcut ever fills a column.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .classify import SKind, cauchy_classify, detect_s_kind, lagrange_classify, sylow_classify
from .constructors import ln, ln_admissible, ln_count, zn, zn_class_size, zn_params
from .magma import (FiniteMagma, IdentityLaw, PreconditionError,
                    SubsetPredicate, check_identity_law,
                    classify_basic)

ATLAS_COLUMNS = [
    "family", "params", "order",
    "associative", "commutative", "idempotent",
    "left_alt", "right_alt", "wip",
    "moufang", "bol", "bruck",
    "p_groupoid",
    "s_semigroup", "s_loop", "s_groupoid",
    "s_neutrosophic_group", "strong_s_neutrosophic_group",
    "s_neutrosophic_semigroup", "s_neutrosophic_loop", "s_neutrosophic_groupoid",
    "lagrange_verdict", "sylow_verdict", "cauchy_verdict",
]


@dataclass(frozen=True)
class AtlasRecord:
    family: str
    params: str
    order: int
    flags: dict
    s_flags: dict
    lagrange_verdict: str
    sylow_verdict: str
    cauchy_verdict: str

    def row(self):
        out = [self.family, self.params, self.order]
        for col in ATLAS_COLUMNS[3:13]:
            out.append(int(self.flags[col]))
        for col in ATLAS_COLUMNS[13:21]:
            out.append(int(self.s_flags[col]))
        out.extend([self.lagrange_verdict, self.sylow_verdict, self.cauchy_verdict])
        return out


def _law_flag(m, law):
    try:
        return check_identity_law(m, law).holds
    except PreconditionError:
        return False   # inverse-dependent law on a carrier without inverses


def classify_member(family: str, params: str, m: FiniteMagma) -> AtlasRecord:
    basic = classify_basic(m)
    flags = {
        "associative": basic.is_semigroup,
        "commutative": basic.is_commutative,
        "idempotent": check_identity_law(m, IdentityLaw.IDEMPOTENT).holds,
        "left_alt": check_identity_law(m, IdentityLaw.LEFT_ALTERNATIVE).holds,
        "right_alt": check_identity_law(m, IdentityLaw.RIGHT_ALTERNATIVE).holds,
        "wip": _law_flag(m, IdentityLaw.WIP),
        "moufang": any(_law_flag(m, l) for l in
                       (IdentityLaw.MOUFANG1, IdentityLaw.MOUFANG2, IdentityLaw.MOUFANG3)),
        "bol": _law_flag(m, IdentityLaw.BOL),
        "bruck": (_law_flag(m, IdentityLaw.BRUCK_IDENTITY)
                  and _law_flag(m, IdentityLaw.BRUCK_INVERSE)),
        "p_groupoid": _law_flag(m, IdentityLaw.P_GROUPOID),
    }
    s_flags = {f"{k.value}": detect_s_kind(m, k).holds for k in SKind}
    species = SubsetPredicate.IS_GROUP if basic.is_loop else SubsetPredicate.IS_SEMIGROUP
    lag = lagrange_classify(m, species).verdict.value
    syl = sylow_classify(m, species).verdict.value
    cau = cauchy_classify(m).verdict.value
    return AtlasRecord(family, params, m.order, flags, s_flags, lag, syl, cau)


def atlas_ln(n_values):
    """Records for every admissible member over the given n values, plus the
    per-n (count, formula) footer pairs."""
    records = []
    footer = []
    for n in n_values:
        ms = ln_admissible(n)
        for m in ms:
            records.append(classify_member("ln", f"n={n},m={m}", ln(n, m)))
        footer.append((f"n={n}", len(ms), ln_count(n)))
    return records, footer


def atlas_zn(n_values, cls="zstar"):
    records = []
    footer = []
    for n in n_values:
        params = zn_params(n, cls)
        for (t, u) in params:
            records.append(classify_member(
                f"zn:{cls}", f"n={n},t={t},u={u}", zn(n, t, u, cls)))
        footer.append((f"n={n}", len(params), zn_class_size(n, cls)))
    return records, footer


def render_csv(records, footer) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(ATLAS_COLUMNS)
    for r in records:
        w.writerow(r.row())
    for name, count, formula in footer:
        w.writerow([f"#count {name}", count, formula,
                    "match" if count == formula else "MISMATCH"])
    return buf.getvalue()


def render_json(records, footer) -> str:
    doc = {
        "records": [
            {"family": r.family, "params": r.params, "order": r.order,
             "flags": {k: bool(v) for k, v in r.flags.items()},
             "s_flags": {k: bool(v) for k, v in r.s_flags.items()},
             "lagrange_verdict": r.lagrange_verdict,
             "sylow_verdict": r.sylow_verdict,
             "cauchy_verdict": r.cauchy_verdict}
            for r in records],
        "footer": [
            {"name": n, "count": c, "formula": f, "match": c == f}
            for n, c, f in footer],
    }
    return json.dumps(doc, indent=1) + "\n"


def counts_match(footer) -> bool:
    return all(c == f for _, c, f in footer)


def parse_range(spec: str):
    """'5..25' or '5,7,9' or '7' -> list of ints."""
    spec = spec.strip()
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    if "," in spec:
        return [int(x) for x in spec.split(",") if x.strip()]
    if not spec:
        return []
    return [int(spec)]
