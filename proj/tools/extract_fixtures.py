#!/usr/bin/env python3
"""Freeze the 1/15(1,5,9) worked-example reference tables into JSON fixtures.

Reads the LaTeX source text shipped at the repository root and extracts three
independently checkable data sets for the group 1/15(1,5,9):

  points_1_15.json   lattice points of the triangulated junior simplex, the
                     classification of the toric divisors, and the strata of
                     the fibre over the origin
  cubes_1_15.json    the fifteen twelve-arrow cube diagrams with their
                     vanishing-divisor labels, normalized to comma form
                     (e.g. "E_{x,8,12}")
  derived_1_15.json  the cohomology table of the transforms of the skyscraper
                     twists, one row per character

The cube labels are cross-validated before freezing: the divisor on an arrow
depends only on a (character, axis) pair, and each such pair is printed four
times across the fifteen diagrams.  Every entry is therefore majority-voted
and any dissenting print is recorded under "corrections" together with the
corrected value.  The source text contains exactly one such misprint (in the
chi_4 diagram) and one more in the divisor classification (the del Pezzo
divisor is printed as E_8, which already appears in the non-compact list);
both corrections are derived from the surrounding data, asserted to be the
only ones, and recorded in the fixtures.

Usage:
  tools/extract_fixtures.py [--source paper.md] [--outdir tests/fixtures]
                            [--check]

With --check the script re-extracts everything and compares against the
committed fixture files, exiting nonzero on any difference.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import Counter, defaultdict
from pathlib import Path

ORDER = 15
WEIGHTS = (1, 5, 9)
KAPPA = tuple((-w) % ORDER for w in WEIGHTS)  # (14, 10, 6)
GROUP_SPEC = "1/15:1,5,9"
AXES = "xyz"

# Grid positions (row, column) of the eight cube corners in each diagram.
CORNER_CELLS = {
    (2, 1): "L123",
    (1, 3): "L23",
    (2, 3): "L13",
    (3, 3): "L12",
    (1, 6): "L1",
    (2, 6): "L2",
    (3, 6): "L3",
    (2, 8): "L",
}

# Axis consumed by the arrow between two corners.
ARROW_AXIS = {
    ("L123", "L23"): "x",
    ("L123", "L13"): "y",
    ("L123", "L12"): "z",
    ("L23", "L2"): "z",
    ("L23", "L3"): "y",
    ("L13", "L1"): "z",
    ("L13", "L3"): "x",
    ("L12", "L1"): "y",
    ("L12", "L2"): "x",
    ("L1", "L"): "x",
    ("L2", "L"): "y",
    ("L3", "L"): "z",
}

# Emission order of the twelve arrows, matching the library's cube layout:
# the three arrows out of L123, then the six face arrows, then the three
# arrows into L.
ARROW_ORDER = [
    ("L123", "L23"),
    ("L123", "L13"),
    ("L123", "L12"),
    ("L23", "L3"),
    ("L23", "L2"),
    ("L13", "L3"),
    ("L13", "L1"),
    ("L12", "L2"),
    ("L12", "L1"),
    ("L1", "L"),
    ("L2", "L"),
    ("L3", "L"),
]

CORNER_ORDER = ["L123", "L23", "L13", "L12", "L1", "L2", "L3", "L"]

SINGLE_CORNER_AXIS = {"L1": 0, "L2": 1, "L3": 2}
FACE_CORNER_AXIS = {"L23": 0, "L13": 1, "L12": 2}


def fail(msg: str) -> None:
    raise SystemExit(f"extract_fixtures: {msg}")


def expect(cond: bool, msg: str) -> None:
    if not cond:
        fail(msg)


# --------------------------------------------------------------------------
# Shared label parsing: "E_x", "E_{z46}", "E_{x45678910111213}", ...
# Divisor names run from 4 to 13, so a digit '1' always starts a two-digit
# name and the concatenated form is unambiguous.
# --------------------------------------------------------------------------

SPACING = ("\\quad", "\\;", "\\,", "\\!", "~")


def strip_spacing(s: str) -> str:
    for junk in SPACING:
        s = s.replace(junk, "")
    return "".join(s.split())


def parse_divisor_letters(content: str, what: str) -> tuple[list[str], list[int]]:
    letters: list[str] = []
    numbers: list[int] = []
    i = 0
    while i < len(content):
        ch = content[i]
        if ch in AXES:
            letters.append(ch)
            i += 1
        elif ch == "1":
            expect(i + 1 < len(content), f"{what}: dangling digit in {content!r}")
            numbers.append(int(content[i : i + 2]))
            i += 2
        elif ch.isdigit():
            numbers.append(int(ch))
            i += 1
        else:
            fail(f"{what}: unexpected character {ch!r} in {content!r}")
    expect(
        letters == sorted(set(letters), key=AXES.index),
        f"{what}: repeated or unordered corner letters in {content!r}",
    )
    expect(
        all(4 <= v <= 13 for v in numbers),
        f"{what}: divisor name out of range in {content!r}",
    )
    expect(
        numbers == sorted(numbers) and len(set(numbers)) == len(numbers),
        f"{what}: repeated or unordered divisor names in {content!r}",
    )
    return letters, numbers


def parse_e_label(raw: str, what: str) -> tuple[list[str], list[int]]:
    s = strip_spacing(raw)
    m = re.fullmatch(r"E_([xyz\d])", s) or re.fullmatch(r"E_\{([xyz\d]+)\}", s)
    expect(m is not None, f"{what}: unrecognized divisor label {raw!r}")
    return parse_divisor_letters(m.group(1), what)


def comma_form(letters: list[str], numbers: list[int]) -> str:
    parts = letters + [str(v) for v in numbers]
    if not parts:
        return "0"
    return "E_{" + ",".join(parts) + "}"


def divisor_names(letters: list[str], numbers: list[int]) -> list[str]:
    return [f"E{c}" for c in letters] + [f"E{v}" for v in numbers]


# --------------------------------------------------------------------------
# Cube diagrams
# --------------------------------------------------------------------------

BLOCK_RE = re.compile(
    r"\\Psi\(\\mathcal\{O\}_0 \\otimes \\chi_\{(\d+)\}\):\\;\s*\\xymatrix\{(.*?)\n\}",
    re.DOTALL,
)
CHI_CELL_RE = re.compile(r"\\mathcal\{L\}\^\{-1\}_\{\\chi_\{(\d+)\}\}")
AR_RE = re.compile(r'\\ar"(\d),(\d)"')


def read_braced_group(text: str, start: int, what: str) -> str:
    """Return the contents of the first balanced {...} group at/after start,
    skipping arrow decorations (^, _, runs of < or >) and whitespace."""
    i = start
    while i < len(text) and text[i] in "^_<> \t\n":
        i += 1
    expect(i < len(text) and text[i] == "{", f"{what}: no label group found")
    depth = 0
    for j in range(i, len(text)):
        if text[j] == "{":
            depth += 1
        elif text[j] == "}":
            depth -= 1
            if depth == 0:
                return text[i + 1 : j]
    fail(f"{what}: unbalanced braces in label group")
    return ""  # unreachable


def corner_char(chi: int, corner: str) -> int:
    if corner in ("L123", "L"):
        return chi
    if corner in FACE_CORNER_AXIS:
        return (chi + WEIGHTS[FACE_CORNER_AXIS[corner]]) % ORDER
    return (chi + KAPPA[SINGLE_CORNER_AXIS[corner]]) % ORDER


def arrow_table_key(chi: int, frm: str, to: str, axis: str) -> tuple[int, str]:
    """(character, axis) pair that determines the vanishing divisor of an
    arrow: arrows out of L123 read the table at chi + weight(axis), arrows
    into L at chi itself, and face arrows at chi + kappa(target axis)."""
    t = AXES.index(axis)
    if frm == "L123":
        psi = (chi + WEIGHTS[t]) % ORDER
    elif to == "L":
        psi = chi
    else:
        psi = (chi + KAPPA[SINGLE_CORNER_AXIS[to]]) % ORDER
    return (psi, axis)


def parse_cube_block(chi: int, body: str) -> tuple[dict[str, int], dict[tuple[str, str], str]]:
    what = f"cube chi_{chi}"
    rows = body.split("\\\\")
    expect(len(rows) == 3, f"{what}: expected 3 grid rows, got {len(rows)}")
    corners: dict[str, int] = {}
    arrows: dict[tuple[str, str], str] = {}
    for r, row in enumerate(rows, start=1):
        cells = row.split("&")
        for c, cell in enumerate(cells, start=1):
            if "\\mathcal{L}" not in cell:
                expect(
                    cell.strip() == "",
                    f"{what}: unexpected content in empty cell ({r},{c}): {cell!r}",
                )
                continue
            expect((r, c) in CORNER_CELLS, f"{what}: corner at unexpected cell ({r},{c})")
            corner = CORNER_CELLS[(r, c)]
            mchi = CHI_CELL_RE.search(cell)
            expect(mchi is not None, f"{what}: cell ({r},{c}) has no character")
            expect(corner not in corners, f"{what}: duplicate corner {corner}")
            corners[corner] = int(mchi.group(1))
            for am in AR_RE.finditer(cell):
                target_cell = (int(am.group(1)), int(am.group(2)))
                expect(
                    target_cell in CORNER_CELLS,
                    f"{what}: arrow from {corner} to unexpected cell {target_cell}",
                )
                target = CORNER_CELLS[target_cell]
                expect(
                    (corner, target) in ARROW_AXIS,
                    f"{what}: unexpected arrow {corner} -> {target}",
                )
                label = read_braced_group(cell, am.end(), f"{what}: arrow {corner}->{target}")
                expect((corner, target) not in arrows, f"{what}: duplicate arrow {corner}->{target}")
                arrows[(corner, target)] = label
    expect(len(corners) == 8, f"{what}: expected 8 corners, got {len(corners)}")
    expect(len(arrows) == 12, f"{what}: expected 12 arrows, got {len(arrows)}")
    for corner, got in corners.items():
        want = corner_char(chi, corner)
        expect(got == want, f"{what}: corner {corner} is chi_{got}, expected chi_{want}")
    return corners, arrows


def extract_cubes(text: str) -> dict:
    blocks = BLOCK_RE.findall(text)
    expect(len(blocks) == ORDER, f"expected {ORDER} cube diagrams, found {len(blocks)}")
    seen = [int(chi) for chi, _ in blocks]
    expect(seen == list(range(ORDER)), f"cube diagrams out of order: {seen}")

    parsed = {}
    votes: dict[tuple[int, str], list[tuple[int, str, str, str]]] = defaultdict(list)
    for chi_str, body in blocks:
        chi = int(chi_str)
        corners, arrows = parse_cube_block(chi, body)
        labels = {}
        for (frm, to), raw in arrows.items():
            axis = ARROW_AXIS[(frm, to)]
            letters, numbers = parse_e_label(raw, f"cube chi_{chi} arrow {frm}->{to}")
            expect(
                axis in letters,
                f"cube chi_{chi} arrow {frm}->{to}: label {raw!r} misses axis {axis}",
            )
            label = comma_form(letters, numbers)
            labels[(frm, to)] = label
            votes[arrow_table_key(chi, frm, to, axis)].append((chi, frm, to, label))
        parsed[chi] = (corners, labels)

    # Majority-vote every (character, axis) table entry across its four prints.
    final: dict[tuple[int, str], str] = {}
    corrections = []
    total = 0
    for key, instances in sorted(votes.items()):
        expect(len(instances) == 4, f"table entry {key}: expected 4 prints, got {len(instances)}")
        total += len(instances)
        counts = Counter(label for *_, label in instances)
        winner, wcount = counts.most_common(1)[0]
        expect(wcount >= 3, f"table entry {key}: no clear majority among {counts}")
        final[key] = winner
        for chi, frm, to, label in instances:
            if label != winner:
                corrections.append(
                    {
                        "chi": chi,
                        "from": frm,
                        "to": to,
                        "axis": key[1],
                        "printed": label,
                        "label": winner,
                    }
                )
    expect(total == 180, f"expected 180 arrow labels, saw {total}")
    expect(
        corrections
        == [
            {
                "chi": 4,
                "from": "L13",
                "to": "L3",
                "axis": "x",
                "printed": "E_{x,12,13}",
                "label": "E_{x,8,12}",
            }
        ],
        f"unexpected set of label corrections: {corrections}",
    )

    cubes = []
    for chi in range(ORDER):
        corners, _labels = parsed[chi]
        arrows = []
        for frm, to in ARROW_ORDER:
            axis = ARROW_AXIS[(frm, to)]
            arrows.append(
                {
                    "axis": axis,
                    "from": frm,
                    "to": to,
                    "label": final[arrow_table_key(chi, frm, to, axis)],
                }
            )
        cubes.append(
            {
                "chi": chi,
                "corners": [corners[c] for c in CORNER_ORDER],
                "arrows": arrows,
            }
        )
    return {
        "group": GROUP_SPEC,
        "corners_order": CORNER_ORDER,
        "corrections": corrections,
        "cubes": cubes,
    }


# --------------------------------------------------------------------------
# Cohomology table of the transforms
# --------------------------------------------------------------------------

H_HEADER_RE = re.compile(r"\\chi \\setminus \\mathcal\{H\}\^\\bullet")
CURVE_CELL_RE = re.compile(r"\\mathcal\{O\}_\{C_\{(\d+)\\cap(\d+)\}\}\(-1\)")
SELF_TWIST_CELL_RE = re.compile(r"\\mathcal\{O\}_\{(E_(?:[xyz\d]|\{[xyz\d]+\}))\}\((E_(?:[xyz\d]|\{[xyz\d]+\}))\)")
LINE_BUNDLE_CELL_RE = re.compile(
    r"\\mathcal\{L\}\^\{-1\}_\{\\chi_\{(\d+)\}\}"
    r"(?:\(-(E_(?:[xyz\d]|\{[xyz\d]+\}))\))?"
    r"\\otimes\\mathcal\{O\}_\{(.+)\}"
)
SUPPORT_CURVE_RE = re.compile(r"C_\{(\d+)\\cap(\d+)\}")


def parse_h_cell(chi: int, deg: str, cell: str) -> dict | None:
    what = f"cohomology row chi_{chi}, degree {deg}"
    s = strip_spacing(cell)
    if s == "0":
        return None
    m = CURVE_CELL_RE.fullmatch(s)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        return {
            "twist": [],
            "degree": -1,
            "support": {"curve": [f"E{a}", f"E{b}"]},
        }
    m = SELF_TWIST_CELL_RE.fullmatch(s)
    if m:
        sup = divisor_names(*parse_e_label(m.group(1), what))
        twist = divisor_names(*parse_e_label(m.group(2), what))
        expect(sup == twist, f"{what}: self-twist {twist} differs from support {sup}")
        return {"self_twist": True, "support": {"divisors": sup}}
    m = LINE_BUNDLE_CELL_RE.fullmatch(s)
    if m:
        expect(
            int(m.group(1)) == chi,
            f"{what}: line bundle character chi_{m.group(1)} does not match the row",
        )
        twist = divisor_names(*parse_e_label(m.group(2), what)) if m.group(2) else []
        sup_text = m.group(3)
        mc = SUPPORT_CURVE_RE.fullmatch(sup_text)
        if mc:
            support = {"curve": [f"E{int(mc.group(1))}", f"E{int(mc.group(2))}"]}
        else:
            support = {"divisors": divisor_names(*parse_e_label(sup_text, what))}
        return {"twist": twist, "support": support}
    fail(f"{what}: unrecognized cell {cell!r}")
    return None  # unreachable


def extract_derived_table(text: str) -> dict:
    mh = H_HEADER_RE.search(text)
    expect(mh is not None, "cohomology table header not found")
    end = text.find("\\end{array}", mh.start())
    expect(end >= 0, "cohomology table end not found")
    body = text[mh.start() : end].replace("\\hline", "")
    rows_raw = body.split("\\\\")

    rows = []
    seen = []
    for raw in rows_raw[1:]:  # skip the header row
        if "\\chi_" not in raw:
            expect(raw.strip() == "", f"unexpected cohomology table fragment {raw!r}")
            continue
        cells = raw.split("&")
        expect(len(cells) == 4, f"cohomology row has {len(cells)} cells: {raw!r}")
        mrow = re.fullmatch(r"\\chi_\{?(\d+)\}?", cells[0].strip())
        expect(mrow is not None, f"unrecognized row label {cells[0]!r}")
        chi = int(mrow.group(1))
        seen.append(chi)
        hs = {}
        for deg, cell in zip(("-2", "-1", "0"), cells[1:]):
            entry = parse_h_cell(chi, deg, cell)
            if entry is not None:
                hs[deg] = entry
        expect(hs, f"cohomology row chi_{chi} is entirely zero")
        if chi == 0:
            expect(sorted(hs) == ["-1", "-2"], f"trivial-character row has degrees {sorted(hs)}")
        else:
            expect(len(hs) == 1, f"cohomology row chi_{chi} has {len(hs)} nonzero degrees")
        rows.append({"chi": chi, "H": hs})
    expect(seen == list(range(ORDER)), f"cohomology rows out of order: {seen}")
    return {"group": GROUP_SPEC, "rows": rows}


# --------------------------------------------------------------------------
# Simplex points, divisor classification, fibre strata
# --------------------------------------------------------------------------

POINT_RE = re.compile(r"\$\s*e_\{?(\d+)\}?\s*=\s*(\\frac\{1\}\{15\})?\s*\((\d+)\s*,\s*(\d+)\s*,\s*(\d+)\)\s*\$")
KAPPA_RE = re.compile(r"\\kappa\(x_(\d)\) = \\chi_\{?(\d+)\}?")
SCROLL_PAIR_RE = re.compile(
    r"\$E_\{?(\d+)\}?\$ and \$E_\{?(\d+)\}?\$, each isomorphic to a rational scroll\s+blown up in a point"
)
SCROLL_TWO_RE = re.compile(r"\$E_\{?(\d+)\}?\$, isomorphic to a rational scroll blown up in two points")
DEL_PEZZO_RE = re.compile(r"\$E_\{?(\d+)\}?\$, isomorphic to the Del Pezzo surface \$dP_6\$")
PLAIN_SCROLL_RE = re.compile(r"\$E_\{?(\d+)\}?\$, isomorphic to \$\\mathbb\{P\}\^1 \\times \\mathbb\{A\}\^1\$\.")
BLOWN_LIST_RE = re.compile(
    r"((?:\$E_\{?\d+\}?\$,?\s*(?:and\s+)?)+)each isomorphic\s+to \$\\mathbb\{P\}\^1 \\times \\mathbb\{A\}\^1\$ blown up in a point"
)
SURFACE_STRATUM_RE = re.compile(r"Two-dimensional stratum.*?compact exceptional divisors\s+([^.]*)\.", re.DOTALL)
CURVE_STRATUM_RE = re.compile(r"One-dimensional stratum.*?curve \$E_\{?(\d+)\}? \\cap E_\{?(\d+)\}?", re.DOTALL)
E_ID_RE = re.compile(r"E_\{?(\d+)\}?")


def point_name(e: int) -> str:
    return {1: "Ex", 2: "Ey", 3: "Ez"}.get(e, f"E{e}")


def extract_points(text: str) -> dict:
    start = text.find("\\section{Worked example}")
    expect(start >= 0, "worked-example section not found")
    stop = text.find("\\subsection{CT-subdivisions}", start)
    expect(stop > start, "end of the group/resolution subsection not found")
    region = text[start:stop]

    mk = KAPPA_RE.findall(region)
    expect(len(mk) == 3, f"expected 3 kappa assignments, found {len(mk)}")
    kappa_seen = {int(axis): int(chi) for axis, chi in mk}
    expect(
        kappa_seen == {t + 1: KAPPA[t] for t in range(3)},
        f"kappa characters {kappa_seen} disagree with the group data",
    )

    coords: dict[int, list[int]] = {}
    for m in POINT_RE.finditer(region):
        e = int(m.group(1))
        v = [int(m.group(3)), int(m.group(4)), int(m.group(5))]
        if not m.group(2):
            v = [ORDER * c for c in v]
        if e in coords:
            expect(coords[e] == v, f"point e_{e} printed with two different values")
        coords[e] = v
    expect(sorted(coords) == list(range(1, 14)), f"expected points e_1..e_13, found {sorted(coords)}")
    for e, v in coords.items():
        expect(sum(v) == ORDER, f"point e_{e} = {v} does not lie on the junior simplex")

    interior = sorted(e for e, v in coords.items() if all(c > 0 for c in v))

    msp = SCROLL_PAIR_RE.search(region)
    expect(msp is not None, "scroll-pair sentence not found")
    scroll_one = sorted(int(g) for g in msp.groups())
    ms2 = SCROLL_TWO_RE.search(region)
    expect(ms2 is not None, "two-point-blowup scroll sentence not found")
    scroll_two = int(ms2.group(1))
    mdp = DEL_PEZZO_RE.search(region)
    expect(mdp is not None, "del Pezzo sentence not found")
    dp_printed = int(mdp.group(1))

    mp = PLAIN_SCROLL_RE.search(region)
    expect(mp is not None, "plain ruled-divisor sentence not found")
    plain = int(mp.group(1))
    mb = BLOWN_LIST_RE.search(region)
    expect(mb is not None, "blown-up ruled-divisor sentence not found")
    blown = sorted(int(g) for g in E_ID_RE.findall(mb.group(1)))
    noncompact = sorted([plain] + blown)

    # The compact (interior) divisors are determined by the point coordinates;
    # the one del Pezzo among them is the one not accounted for as a scroll.
    corrections = []
    accounted = sorted(scroll_one + [scroll_two])
    expect(len(interior) == 4, f"expected 4 interior points, found {interior}")
    expect(
        all(e in interior for e in accounted) and len(accounted) == 3,
        f"scroll divisors {accounted} are not three of the interior ones {interior}",
    )
    dp_actual = next(e for e in interior if e not in accounted)
    if dp_printed != dp_actual:
        expect(
            dp_printed in noncompact,
            f"del Pezzo divisor printed as E_{dp_printed}, which is neither interior nor non-compact",
        )
        corrections.append(
            {
                "where": "compact divisor classification",
                "printed": f"E{dp_printed}",
                "label": f"E{dp_actual}",
                "note": f"E{dp_printed} already appears in the non-compact list; "
                f"E{dp_actual} is the remaining interior divisor",
            }
        )
    expect(
        corrections
        == [
            {
                "where": "compact divisor classification",
                "printed": "E8",
                "label": "E10",
                "note": "E8 already appears in the non-compact list; E10 is the remaining interior divisor",
            }
        ],
        f"unexpected set of classification corrections: {corrections}",
    )

    msf = SURFACE_STRATUM_RE.search(region)
    expect(msf is not None, "surface-stratum sentence not found")
    fibre_surface = sorted(int(g) for g in E_ID_RE.findall(msf.group(1)))
    expect(
        fibre_surface == interior,
        f"surface stratum {fibre_surface} differs from the interior divisors {interior}",
    )
    mcv = CURVE_STRATUM_RE.search(region)
    expect(mcv is not None, "curve-stratum sentence not found")
    fibre_curve = sorted(int(g) for g in mcv.groups())

    compact = []
    for e in interior:
        if e == dp_actual:
            surface = {"type": "dP6"}
        elif e == scroll_two:
            surface = {"type": "scroll", "blowups": 2}
        else:
            surface = {"type": "scroll", "blowups": 1}
        compact.append({"name": f"E{e}", "surface": surface})

    return {
        "group": GROUP_SPEC,
        "order": ORDER,
        "weights": list(WEIGHTS),
        "kappa": list(KAPPA),
        "points": [
            {"e": e, "name": point_name(e), "coords": coords[e]} for e in sorted(coords)
        ],
        "compact_divisors": compact,
        "noncompact_exceptional": [
            {"name": f"E{e}", "blowups": 0 if e == plain else 1} for e in noncompact
        ],
        "fibre": {
            "surface": [f"E{e}" for e in fibre_surface],
            "curves": [[f"E{a}" for a in fibre_curve]],
        },
        "corrections": corrections,
    }


# --------------------------------------------------------------------------
# Driver
# --------------------------------------------------------------------------

FIXTURES = {
    "points_1_15.json": extract_points,
    "cubes_1_15.json": extract_cubes,
    "derived_1_15.json": extract_derived_table,
}


def main() -> int:
    root = Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--source", type=Path, default=root / "paper.md")
    ap.add_argument("--outdir", type=Path, default=root / "tests" / "fixtures")
    ap.add_argument(
        "--check",
        action="store_true",
        help="compare against the committed fixtures instead of writing",
    )
    args = ap.parse_args()

    text = args.source.read_text(encoding="utf-8")
    failures = 0
    for name, extractor in FIXTURES.items():
        data = extractor(text)
        out = args.outdir / name
        if args.check:
            if not out.exists():
                print(f"MISSING  {out}")
                failures += 1
                continue
            committed = json.loads(out.read_text(encoding="utf-8"))
            if committed == data:
                print(f"ok       {out}")
            else:
                print(f"DIFFERS  {out}")
                failures += 1
        else:
            args.outdir.mkdir(parents=True, exist_ok=True)
            out.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
            print(f"wrote    {out}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
