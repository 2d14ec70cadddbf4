"""Flat-file formats: group files, matched-pair dumps, Hopf dumps.

All loaders are strict and report the line they fail on; every format
round-trips bit-exactly (load(dump(x)) == x structurally, and dumping
again reproduces the same bytes).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import get_field
from .groups import PermGroup
from .hopf import HopfAlgebra
from .matched import MatchedPair
from .perm import PermParseError, cycle_string, parse_cycles


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


# ---------------------------------------------------------------------------
# group files


def dump_group(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines += [cycle_string(g) for g in G.generators]
    return "\n".join(lines) + "\n"


def load_group(text: str, name: str = "") -> PermGroup:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty group file")
    lno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
        raise FormatError(f"expected 'degree n', got {head!r}", lno)
    degree = int(parts[1])
    gens = []
    for lno, ln in lines[1:]:
        try:
            gens.append(parse_cycles(ln, degree))
        except PermParseError as exc:
            raise FormatError(str(exc), lno) from exc
    return PermGroup(degree, gens, name=name)


# ---------------------------------------------------------------------------
# matched pair dumps


def dump_matched_pair(mp: MatchedPair) -> str:
    out = ["[G]", dump_group(mp.G).rstrip(), "[GAMMA]", dump_group(mp.Gamma).rstrip()]
    gx = {x: i for i, x in enumerate(mp.G.elements)}
    gam = {s: i for i, s in enumerate(mp.Gamma.elements)}
    out.append("[TRIANGLE_LEFT]")
    for s in mp.Gamma.elements:
        out.append(" ".join(str(gx[mp.rtri(s, x)]) for x in mp.G.elements))
    out.append("[TRIANGLE_RIGHT]")
    for s in mp.Gamma.elements:
        out.append(" ".join(str(gam[mp.ltri(s, x)]) for x in mp.G.elements))
    return "\n".join(out) + "\n"


def load_matched_pair(text: str) -> MatchedPair:
    sections: dict[str, list[tuple[int, str]]] = {}
    current = None
    for i, ln in enumerate(text.splitlines(), start=1):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if ln.startswith("[") and ln.endswith("]"):
            current = ln[1:-1]
            sections[current] = []
            continue
        if current is None:
            raise FormatError("content before any section header", i)
        sections[current].append((i, ln))
    for needed in ("G", "GAMMA", "TRIANGLE_LEFT", "TRIANGLE_RIGHT"):
        if needed not in sections:
            raise FormatError(f"missing section [{needed}]")
    G = load_group("\n".join(ln for _, ln in sections["G"]))
    Gamma = load_group("\n".join(ln for _, ln in sections["GAMMA"]))
    left = {}
    right = {}
    for section, table, codomain in (("TRIANGLE_LEFT", left, G.elements),
                                     ("TRIANGLE_RIGHT", right, Gamma.elements)):
        rows = sections[section]
        if len(rows) != Gamma.order:
            raise FormatError(f"[{section}] needs {Gamma.order} rows", rows[0][0] if rows else None)
        for s, (lno, ln) in zip(Gamma.elements, rows):
            cells = ln.split()
            if len(cells) != G.order:
                raise FormatError(f"row needs {G.order} entries", lno)
            for x, cell in zip(G.elements, cells):
                try:
                    table[(s, x)] = codomain[int(cell)]
                except (ValueError, IndexError) as exc:
                    raise FormatError(f"bad index {cell!r}", lno) from exc
    return MatchedPair(G=G, Gamma=Gamma, left_action=left, right_action=right)


# ---------------------------------------------------------------------------
# Hopf dumps


def _coords_str(scalar) -> str:
    return " ".join(str(c) for c in scalar.coords)


def dump_hopf(H: HopfAlgebra) -> str:
    out = ["HOPF v1", f"DIM {H.dim}", f"CONDUCTOR {H.field.conductor}", "BASIS"]
    for i, lab in enumerate(H.basis_labels):
        out.append(f"{i} {lab}")
    out.append("MULT")
    for i in range(H.dim):
        for j in range(H.dim):
            for k, c in H.mult[i][j]:
                out.append(f"{i} {j} : {k} : {_coords_str(c)}")
    out.append("COMULT")
    for i in range(H.dim):
        for j, k, c in H.comult[i]:
            out.append(f"{i} : {j} {k} : {_coords_str(c)}")
    out.append("UNIT")
    for i in sorted(H.unit):
        out.append(f"{i} : {_coords_str(H.unit[i])}")
    out.append("COUNIT")
    for i, c in enumerate(H.counit):
        if not c.is_zero():
            out.append(f"{i} : {_coords_str(c)}")
    out.append("ANTIPODE")
    for j in range(H.dim):
        for i in sorted(H.antipode[j]):
            out.append(f"{j} : {i} : {_coords_str(H.antipode[j][i])}")
    out.append("END")
    return "\n".join(out) + "\n"


_SECTIONS = ("BASIS", "MULT", "COMULT", "UNIT", "COUNIT", "ANTIPODE")


def load_hopf(text: str) -> HopfAlgebra:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "HOPF v1":
        raise FormatError("missing 'HOPF v1' header", 1)
    dim = conductor = None
    idx = 1
    while idx < len(lines) and lines[idx].strip() not in _SECTIONS:
        ln = lines[idx].strip()
        if ln.startswith("DIM "):
            dim = int(ln[4:])
        elif ln.startswith("CONDUCTOR "):
            conductor = int(ln[10:])
        elif ln:
            raise FormatError(f"unexpected header line {ln!r}", idx + 1)
        idx += 1
    if dim is None or conductor is None:
        raise FormatError("missing DIM or CONDUCTOR header")
    field = get_field(conductor)

    chunks: dict[str, list[tuple[int, str]]] = {}
    current = None
    saw_end = False
    for lno in range(idx, len(lines)):
        ln = lines[lno].strip()
        if not ln:
            continue
        if ln == "END":
            saw_end = True
            break
        if ln in _SECTIONS:
            current = ln
            chunks[current] = []
            continue
        if current is None:
            raise FormatError(f"content outside any section: {ln!r}", lno + 1)
        chunks[current].append((lno + 1, ln))
    if not saw_end:
        raise FormatError("missing END marker")
    for needed in _SECTIONS:
        if needed not in chunks:
            raise FormatError(f"missing section {needed}")

    def scalar(tokens, lno):
        coords = []
        for tok in tokens:
            try:
                coords.append(Fraction(tok))
            except ValueError as exc:
                raise FormatError(f"bad rational {tok!r}", lno) from exc
        if len(coords) != field.degree:
            raise FormatError(
                f"need {field.degree} coordinates, got {len(coords)}", lno)
        return field.scalar(coords)

    labels = [""] * dim
    for lno, ln in chunks["BASIS"]:
        i_str, _, lab = ln.partition(" ")
        i = int(i_str)
        if not 0 <= i < dim:
            raise FormatError(f"basis index {i} out of range", lno)
        labels[i] = lab

    mult_cells: dict[tuple[int, int], list] = {}
    for lno, ln in chunks["MULT"]:
        head, _, rest = ln.partition(":")
        kpart, _, cpart = rest.partition(":")
        try:
            i, j = (int(t) for t in head.split())
            k = int(kpart)
        except ValueError as exc:
            raise FormatError("malformed MULT entry", lno) from exc
        mult_cells.setdefault((i, j), []).append((k, scalar(cpart.split(), lno)))
    mult = tuple(tuple(tuple(mult_cells.get((i, j), ()))
                       for j in range(dim)) for i in range(dim))

    comult_terms: dict[int, list] = {}
    for lno, ln in chunks["COMULT"]:
        head, _, rest = ln.partition(":")
        jk, _, cpart = rest.partition(":")
        try:
            i = int(head)
            j, k = (int(t) for t in jk.split())
        except ValueError as exc:
            raise FormatError("malformed COMULT entry", lno) from exc
        comult_terms.setdefault(i, []).append((j, k, scalar(cpart.split(), lno)))
    comult = tuple(tuple(comult_terms.get(i, ())) for i in range(dim))

    unit = {}
    for lno, ln in chunks["UNIT"]:
        head, _, cpart = ln.partition(":")
        unit[int(head)] = scalar(cpart.split(), lno)
    counit = [field.zero] * dim
    for lno, ln in chunks["COUNIT"]:
        head, _, cpart = ln.partition(":")
        counit[int(head)] = scalar(cpart.split(), lno)
    antipode = [dict() for _ in range(dim)]
    for lno, ln in chunks["ANTIPODE"]:
        head, _, rest = ln.partition(":")
        ipart, _, cpart = rest.partition(":")
        antipode[int(head)][int(ipart)] = scalar(cpart.split(), lno)
    return HopfAlgebra(field, labels, mult, unit, comult, tuple(counit),
                       tuple(antipode))
