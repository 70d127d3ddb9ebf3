"""Lattice input documents, JSON analysis reports and DOT export."""
import json
import re

import hibi
from hibi.cotangent import cotangent_report
from hibi.errors import InternalError, InvalidInput
from hibi.faces import enumerate_faces, make_face
from hibi.lattice import builtin_family, embedded_violations, lattice_from_irreducibles, lattice_from_poset
from hibi.oracle import semigroup_rank_oracle, tangent_dim_oracle
from hibi.poset import bits, poset_from_covers
from hibi.singular import classify_point, face_reports, locus_from_reports, singular_locus
from hibi.toric import VarietyPoint, cone_generators, semigroup_generators


def load_document(doc):
    """Build a lattice from a LatticeSpec mapping."""
    if not isinstance(doc, dict):
        raise InvalidInput("lattice document must be a JSON object")
    has_family = "family" in doc
    has_explicit = "elements" in doc or "covers" in doc
    if has_family == has_explicit:
        raise InvalidInput("document needs exactly one of 'family' or 'elements'+'covers'")
    if has_family:
        return builtin_family(str(doc["family"]))
    elements = doc.get("elements")
    covers = doc.get("covers", [])
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InvalidInput("'elements' must be a list of strings")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(e, str) for e in c) for c in covers
    ):
        raise InvalidInput("'covers' must be a list of [lower, upper] string pairs")
    mode = doc.get("mode", "lattice")
    name = doc.get("name")
    poset = poset_from_covers(elements, [tuple(c) for c in covers])
    if mode == "lattice":
        return lattice_from_poset(poset, name=name)
    if mode == "irreducibles":
        return lattice_from_irreducibles(poset, name=name)
    raise InvalidInput(f"unknown mode {mode!r}", witness=mode)


def lattice_document(l):
    return {
        "name": l.name,
        "elements": list(l.elements),
        "covers": [[l.elements[a], l.elements[b]] for a, b in l.poset.covers],
        "mode": "lattice",
    }


_QUOTED = r'"((?:[^"\\]|\\.)*)"'
_EDGE = re.compile(rf"^\s*{_QUOTED}\s*->\s*{_QUOTED}")
_NODE = re.compile(rf"^\s*{_QUOTED}\s*(\[|;)")
_GRAPH = re.compile(rf"^\s*digraph\s+{_QUOTED}")


def _unquote(s):
    return re.sub(r"\\(.)", r"\1", s)


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def read_dot(text):
    """Lattice from a Hasse diagram written by :func:`export_dot`."""
    name = None
    elements = []
    covers = []
    for line in text.splitlines():
        m = _GRAPH.match(line)
        if m:
            name = _unquote(m.group(1))
            continue
        m = _EDGE.match(line)
        if m:
            covers.append((_unquote(m.group(1)), _unquote(m.group(2))))
            continue
        m = _NODE.match(line)
        if m:
            node = _unquote(m.group(1))
            if node not in elements:
                elements.append(node)
    return lattice_from_poset(poset_from_covers(elements, covers), name=name)


def export_dot(l, highlight_singular=False, cap=None):
    """Hasse diagram in DOT, bottom to top, nodes in element order."""
    marks = {}
    comments = []
    if highlight_singular:
        locus = singular_locus(l, cap=cap)
        for k, comp in enumerate(locus.components):
            comments.append(f"  // singular component {k}: {json.dumps(comp.names())}")
            for x in bits(comp.mask):
                marks.setdefault(x, []).append(str(k))
        if not locus.components:
            comments.append("  // singular locus: empty")
    lines = [f"digraph {_quote(l.name or 'lattice')} {{"]
    lines.extend(comments)
    lines.append("  rankdir=BT;")
    lines.append("  node [shape=ellipse];")
    for x, e in enumerate(l.elements):
        if x in marks:
            comp = ",".join(marks[x])
            lines.append(f'  {_quote(e)} [component="{comp}", style=filled, fillcolor="#f4a9a8"];')
        else:
            lines.append(f"  {_quote(e)};")
    for a, b in l.poset.covers:
        lines.append(f"  {_quote(l.elements[a])} -> {_quote(l.elements[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _face_summary(report):
    face = report.face
    return {
        "D": face.names(),
        "orbit_dim": face.orbit_dim,
        "cone_dim": face.cone_dim,
        "tangent_dim": report.tangent_dim,
        "smooth": report.smooth,
    }


def cotangent_document(l, report):
    names = l.elements
    lam_mask = 0
    for x in report.lambda_set:
        lam_mask |= 1 << x
    return {
        "face": report.face.names(),
        "gamma": [names[g] for g in report.gamma],
        "lambda_set": l.names_of(lam_mask),
        "lambda_is_embedded": not embedded_violations(l, lam_mask),
        "e_set": [names[x] for x in sorted(report.e_set)],
        "classes": [[names[x] for x in c] for c in report.classes],
        "g_classes": [[names[x] for x in c] for c in report.g_classes],
        "basis_labels": [f"{kind}({names[x]})" for kind, x in report.basis_labels],
        "tangent_dim": report.tangent_dim,
        "variety_dim": l.dim,
        "smooth": report.smooth,
    }


def analysis_report(l, faces=False, max_faces=None, singular=False, oracle=False,
                    face=None, gamma=None, point=None, jobs=1):
    """Assemble the AnalysisReport mapping. ``face``/``gamma`` are name lists."""
    names = l.elements
    legend = [names[z] for z in l.irreducibles]
    doc = {
        "tool": {"name": "hibi", "version": hibi.__version__},
        "lattice": {
            "name": l.name,
            "size": len(l),
            "elements": list(names),
            "covers": [[names[a], names[b]] for a, b in l.poset.covers],
            "join_irreducibles": legend,
            "dim": l.dim,
            "is_chain": l.is_chain(),
            "diamonds": len(l.diamonds()),
        },
        "cone": {
            "legend": legend,
            "rays": [list(r) for r in cone_generators(l)],
            "semigroup_generators": [
                {"element": names[x], "vector": list(v)}
                for x, v in enumerate(semigroup_generators(l))
            ],
        },
    }
    failures = []
    if faces or singular or oracle:
        all_faces = enumerate_faces(l, max_faces)
        reports = face_reports(l, all_faces, jobs)
        if faces:
            doc["faces"] = [_face_summary(reports[f]) for f in all_faces]
        if singular:
            locus = locus_from_reports(l, all_faces, reports)
            doc["singular_locus"] = {
                "variety_dim": locus.variety_dim,
                "is_smooth_variety": locus.is_smooth_variety,
                "singular_faces": [f.names() for f in locus.singular_faces],
                "components": [f.names() for f in locus.components],
            }
        if oracle:
            rows = []
            for f in all_faces:
                combinatorial = reports[f].tangent_dim
                jacobian = tangent_dim_oracle(l, f.mask)
                agree = combinatorial == jacobian
                if not agree:
                    failures.append(f.names())
                rows.append({"D": f.names(), "combinatorial": combinatorial,
                             "jacobian": jacobian, "agree": agree})
            srank = semigroup_rank_oracle(l)
            if srank != l.dim:
                failures.append("semigroup rank")
            doc["oracle"] = {
                "faces_checked": len(rows),
                "all_agree": not failures,
                "semigroup_rank": srank,
                "per_face": rows,
            }
    if face is not None:
        f = make_face(l, l.poset.indices(face))
        g = None if gamma is None else l.poset.indices(gamma)
        doc["face_report"] = cotangent_document(l, cotangent_report(l, f, g))
    if point is not None:
        if len(point) != len(l):
            raise InvalidInput(f"point needs {len(l)} coordinates, got {len(point)}")
        pc = classify_point(l, VarietyPoint(point))
        doc["point"] = {"face": pc.face.names(), "smooth_at_point": pc.smooth_at_point}
    if failures:
        raise OracleDisagreement(doc, failures)
    return doc


class OracleDisagreement(InternalError):
    def __init__(self, report, failures):
        super().__init__(f"oracle disagrees on {failures}", witness=failures)
        self.report = report


def render_text(doc):
    lat = doc["lattice"]
    out = [
        f"lattice {lat['name'] or '(unnamed)'}: {lat['size']} elements, "
        f"dim {lat['dim']}, {lat['diamonds']} diamonds, chain={lat['is_chain']}",
        f"join-irreducibles: {' '.join(lat['join_irreducibles'])}",
        f"cone rays ({len(doc['cone']['rays'])}): "
        + " ".join("(" + ",".join(map(str, r)) + ")" for r in doc["cone"]["rays"]),
    ]
    if "faces" in doc:
        out.append(f"faces ({len(doc['faces'])}):")
        for f in doc["faces"]:
            flag = "smooth" if f["smooth"] else "SINGULAR"
            out.append(f"  {{{', '.join(f['D'])}}} orbit_dim={f['orbit_dim']} "
                       f"tangent_dim={f['tangent_dim']} {flag}")
    if "singular_locus" in doc:
        s = doc["singular_locus"]
        out.append(f"smooth variety: {s['is_smooth_variety']}")
        for k, comp in enumerate(s["components"]):
            out.append(f"  component {k}: {{{', '.join(comp)}}}")
    if "oracle" in doc:
        o = doc["oracle"]
        out.append(f"oracle: {o['faces_checked']} faces checked, all agree: {o['all_agree']}, "
                   f"semigroup rank {o['semigroup_rank']}")
    if "face_report" in doc:
        r = doc["face_report"]
        out.append(f"face {{{', '.join(r['face'])}}}")
        for key in ("gamma", "lambda_set", "e_set"):
            out.append(f"  {key}: {{{', '.join(r[key])}}}")
        out.append(f"  lambda_is_embedded: {r['lambda_is_embedded']}")
        out.append("  G classes: " + " ".join("{" + ",".join(c) + "}" for c in r["g_classes"]))
        out.append(f"  basis: {' '.join(r['basis_labels'])}")
        out.append(f"  tangent_dim {r['tangent_dim']} (variety dim {r['variety_dim']}), "
                   f"smooth={r['smooth']}")
    if "point" in doc:
        p = doc["point"]
        out.append(f"point lies on orbit of {{{', '.join(p['face'])}}}, smooth={p['smooth_at_point']}")
    return "\n".join(out) + "\n"


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
