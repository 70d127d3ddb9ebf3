"""Singular locus of X_L as a union of orbit closures X_D."""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from hibi.cotangent import build_report, cotangent_parts
from hibi.errors import InternalError
from hibi.faces import Face, enumerate_faces
from hibi.toric import support


@dataclass(frozen=True)
class SingularLocusReport:
    variety_dim: int
    is_smooth_variety: bool
    singular_faces: tuple
    components: tuple
    per_face: dict


@dataclass(frozen=True)
class PointClass:
    face: Face
    smooth_at_point: bool


_worker_lattice = None


def _init_worker(l):
    global _worker_lattice
    _worker_lattice = l


def _worker_parts(mask):
    return cotangent_parts(_worker_lattice, mask)


def face_reports(l, faces, jobs=1):
    """Cotangent report per face, optionally fanned out over processes."""
    masks = [f.mask for f in faces]
    if jobs > 1 and len(masks) > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(l,)) as pool:
            parts = list(pool.map(_worker_parts, masks, chunksize=max(1, len(masks) // (4 * jobs))))
    else:
        parts = [cotangent_parts(l, m) for m in masks]
    return {f: build_report(l, f, *p) for f, p in zip(faces, parts)}


def maximal_by_inclusion(faces):
    out = []
    for f in faces:
        if not any(g is not f and f.mask & g.mask == f.mask and f.mask != g.mask for g in faces):
            out.append(f)
    return out


def singular_locus(l, cap=None, jobs=1):
    faces = enumerate_faces(l, cap)
    return locus_from_reports(l, faces, face_reports(l, faces, jobs))


def locus_from_reports(l, faces, reports):
    singular = tuple(f for f in faces if reports[f].tangent_dim > l.dim)
    full = [f for f in faces if f.mask == l.full_mask]
    if full and full[0] in singular:
        raise InternalError("the dense orbit was reported singular")
    return SingularLocusReport(
        variety_dim=l.dim,
        is_smooth_variety=not singular,
        singular_faces=singular,
        components=tuple(maximal_by_inclusion(singular)),
        per_face=reports,
    )


def classify_point(l, p):
    """Face of the orbit through ``p`` and whether X_L is smooth there."""
    from hibi.cotangent import cotangent_report

    mask = support(l, p)
    face = Face(l, mask)
    report = cotangent_report(l, face)
    return PointClass(face=face, smooth_at_point=report.tangent_dim == l.dim)
