"""Combinatorial triple diagrams: cell structure, domains, evaluations.

A diagram is assembled from curves drawn on flat cylinder charts.  All
crossings happen inside charts and are computed exactly; the cell
structure (crossings, curve arcs, complementary regions) is traced from
the rotation system at the crossings.  Curves from different page
pieces never cross, so the curve graph may be disconnected; the traced
per-component "far" faces are merged into the single background region
(the one carrying the basepoint z), whose Euler characteristic is fixed
by the global Euler count.

Domains (integer region multiplicities) support: the triply-periodic
lattice, weak-admissibility certificates, bounded enumeration of
nonnegative triangle domains, Euler measure, and the Chern-class
evaluation with its dual-spider correction computed from exact local
push-off geometry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DomainError, ResourceLimitError
from ..intlinalg import kernel_basis, solve_integer
from .geometry import (
    CoverPath,
    DegenerateGeometry,
    ccw_sorted,
    cross2,
    direction_at,
    path_crossings,
    seg_intersect,
)

EPS = Fraction(1, 2**21)


@dataclass
class Curve:
    """One closed curve of the diagram, drawn in a single chart."""

    family: str  # "alpha" | "gamma" | "beta"
    index: int
    chart: str
    path: CoverPath
    closed_in_chart: bool  # False: closes through the outer region


@dataclass
class Crossing:
    id: int
    chart: str
    point: tuple
    # (curve id, (segment, fraction)) for the two strands
    strands: tuple
    darts_ccw: list = field(default_factory=list)


@dataclass
class Edge:
    id: int
    curve: int
    src: int  # crossing id
    dst: int
    src_dir: tuple
    dst_dir: tuple
    geometry: list  # list of ((s,t),(s,t)) cover segments, possibly two runs
    left_face: int = -1
    right_face: int = -1


@dataclass
class Face:
    id: int
    corners: int
    chi: int
    dart_walk: list


class TripleDiagram:
    """Traced cell structure of a Heegaard triple with marked data."""

    def __init__(self, charts, curves, expected_genus, layout,
                 bg_probes, triangles_hint, w_probe=None, meta=None):
        self.charts = charts  # chart name -> axis_period or None
        self.curves = curves
        self.layout = layout
        self.expected_genus = expected_genus
        self.meta = meta or {}
        self._build_cells(bg_probes)
        self._mark(triangles_hint, w_probe)

    # -- cell construction -------------------------------------------
    def _build_cells(self, bg_probes):
        curves = self.curves
        crossings = []
        per_curve_hits = {ci: [] for ci in range(len(curves))}
        for ia, ib in itertools.combinations(range(len(curves)), 2):
            a, b = curves[ia], curves[ib]
            if a.chart != b.chart:
                continue
            period = self.charts[a.chart]
            for pt, pa, pb in path_crossings(a.path, b.path, period):
                cid = len(crossings)
                crossings.append(Crossing(cid, a.chart, pt, ((ia, pa), (ib, pb))))
                per_curve_hits[ia].append((pa, cid))
                per_curve_hits[ib].append((pb, cid))
        for ci, hits in per_curve_hits.items():
            if len(hits) < 2:
                raise DegenerateGeometry(
                    f"curve {curves[ci].family}{curves[ci].index} has fewer than 2 crossings")
            hits.sort(key=lambda h: (h[0][0], h[0][1]))

        edges = []
        for ci, hits in per_curve_hits.items():
            path = curves[ci].path
            n = len(hits)
            for k in range(n):
                pa, src = hits[k]
                pb, dst = hits[(k + 1) % n]
                wrap = k == n - 1
                geom = self._edge_geometry(path, pa, pb, wrap)
                e = Edge(
                    id=len(edges), curve=ci, src=src, dst=dst,
                    src_dir=direction_at(path, pa[0]),
                    dst_dir=direction_at(path, pb[0]),
                    geometry=geom,
                )
                edges.append(e)

        # rotation system: darts at each crossing, ccw by exact angle
        # dart = (edge id, +1 out of src) or (edge id, -1 out of dst)
        out_darts = {c.id: [] for c in crossings}
        for e in edges:
            out_darts[e.src].append(((e.id, 1), e.src_dir))
            out_darts[e.dst].append(((e.id, -1), (-e.dst_dir[0], -e.dst_dir[1])))
        for c in crossings:
            order = ccw_sorted(out_darts[c.id])
            if len(order) != 4:
                raise DegenerateGeometry(f"crossing {c.id} is not 4-valent")
            c.darts_ccw = [d for d, _ in order]

        # face tracing: from dart d (leaving a vertex), walk the edge,
        # and at the far end turn to the next dart clockwise from the
        # reversed arrival; this walks the face lying left of d.
        dart_pos = {}
        for c in crossings:
            for k, d in enumerate(c.darts_ccw):
                dart_pos[d] = (c.id, k)

        def next_dart(d):
            eid, sgn = d
            e = edges[eid]
            far = e.dst if sgn == 1 else e.src
            rev = (eid, -sgn)
            cid, k = dart_pos[rev]
            order = crossings[cid].darts_ccw
            return order[(k - 1) % 4]

        faces = []
        dart_face = {}
        for c in crossings:
            for d in c.darts_ccw:
                if d in dart_face:
                    continue
                walk = []
                cur = d
                while cur not in dart_face:
                    dart_face[cur] = len(faces)
                    walk.append(cur)
                    cur = next_dart(cur)
                assert cur == d, "face walk did not close"
                faces.append(Face(len(faces), corners=len(walk), chi=1, dart_walk=walk))

        for e in edges:
            e.left_face = dart_face[(e.id, 1)]
            e.right_face = dart_face[(e.id, -1)]

        self.crossings = crossings
        self.edges = edges
        self.faces = faces
        self._merge_background(bg_probes)
        self._euler_check()

    def _edge_geometry(self, path, pa, pb, wrap):
        pts = path.points

        def sub(p_from, p_to):
            (i0, f0), (i1, f1) = p_from, p_to
            start = _interp(pts[i0], pts[i0 + 1], f0)
            out = [start]
            for j in range(i0, i1):
                out.append(pts[j + 1])
            out.append(_interp(pts[i1], pts[i1 + 1], f1))
            return list(zip(out[:-1], out[1:]))

        if not wrap:
            return sub(pa, pb)
        nseg = len(pts) - 1
        tail = sub(pa, (nseg - 1, Fraction(1)))
        head = sub((0, Fraction(0)), pb)
        return tail + head

    def _merge_background(self, bg_probes):
        bg_ids = sorted({self.face_of_point(chart, pt) for chart, pt in bg_probes})
        if len(bg_ids) <= 1:
            self.bg_face = bg_ids[0] if bg_ids else None
            return
        keep = bg_ids[0]
        remap = {}
        for f in self.faces:
            remap[f.id] = keep if f.id in bg_ids else f.id
        corners = sum(self.faces[i].corners for i in bg_ids)
        merged_walk = []
        for i in bg_ids:
            merged_walk.extend(self.faces[i].dart_walk)
        new_faces = []
        newid = {}
        for f in self.faces:
            if f.id in bg_ids and f.id != keep:
                continue
            nf = Face(len(new_faces), f.corners, f.chi, f.dart_walk)
            if f.id == keep:
                nf.corners = corners
                nf.dart_walk = merged_walk
                nf.boundary_walks = len(bg_ids)
            newid[f.id] = nf.id
            new_faces.append(nf)
        for e in self.edges:
            e.left_face = newid[remap[e.left_face]]
            e.right_face = newid[remap[e.right_face]]
        self.bg_face = newid[keep]
        self.faces = new_faces

    def _euler_check(self):
        genus = self.expected_genus
        chi_target = 2 - 2 * genus
        v = len(self.crossings)
        ed = len(self.edges)
        disk_sum = sum(f.chi for f in self.faces if f.id != self.bg_face)
        bg = self.faces[self.bg_face]
        bg.chi = chi_target - v + ed - disk_sum
        walks = getattr(bg, "boundary_walks", 1)
        if bg.chi != 2 - walks:
            raise DomainError(
                f"background region has chi {bg.chi}, expected {2 - walks}: "
                "curve system inconsistent with the expected surface")

    # -- point location ----------------------------------------------
    def face_of_point(self, chart, pt):
        """Face containing an in-chart point, via an exact axis ray cast."""
        best = None
        for e in self.edges:
            if self.curves[e.curve].chart != chart:
                continue
            for (a, b) in e.geometry:
                t_lo, t_hi = min(a[1], b[1]), max(a[1], b[1])
                if not (t_lo < pt[1] < t_hi):
                    continue
                s_at = a[0] + (b[0] - a[0]) * Fraction(pt[1] - a[1], b[1] - a[1])
                dist = (s_at - pt[0]) % 1
                if dist == 0:
                    raise DegenerateGeometry("probe point on a curve")
                if best is None or dist < best[0]:
                    upward = b[1] > a[1]
                    best = (dist, e, upward)
        if best is not None:
            _, e, upward = best
            return e.left_face if upward else e.right_face
        # horizontal ray found nothing (probe above/below every strand):
        # shoot vertically, nearest hit wins, side from strand direction
        up = down = None
        for e in self.edges:
            if self.curves[e.curve].chart != chart:
                continue
            for (a, b) in e.geometry:
                if (a[0] - pt[0]) % 1 == 0 or (b[0] - pt[0]) % 1 == 0:
                    raise DegenerateGeometry("vertical probe ray through a path vertex")
                if a[0] == b[0]:
                    continue
                for ds in range(_ray_lo(a, b, pt), _ray_hi(a, b, pt) + 1):
                    ax, bx = a[0] + ds, b[0] + ds
                    if not (min(ax, bx) < pt[0] < max(ax, bx)):
                        continue
                    t_at = a[1] + (b[1] - a[1]) * Fraction(pt[0] - ax, bx - ax)
                    rightward = bx > ax
                    if t_at > pt[1] and (up is None or t_at < up[0]):
                        up = (t_at, e, rightward)
                    if t_at < pt[1] and (down is None or t_at > down[0]):
                        down = (t_at, e, rightward)
        if up is not None:
            _, e, rightward = up
            return e.right_face if rightward else e.left_face
        if down is not None:
            _, e, rightward = down
            return e.left_face if rightward else e.right_face
        raise DegenerateGeometry(f"probe ray in chart {chart} hit nothing")

    # -- marked data ---------------------------------------------------
    def _mark(self, triangles_hint, w_probe):
        """Locate the distinguished crossings and small-triangle faces.

        ``triangles_hint`` maps strand index i to exact points of
        (x_i, theta_i, y_i); crossings are matched by coordinates.
        """
        coord = {}
        for c in self.crossings:
            coord[(c.chart, (c.point[0] % 1, c.point[1]))] = c.id
        self.x_points, self.theta_points, self.y_points, self.triangle_faces = [], [], [], []
        for chart, (px, pth, py) in triangles_hint:
            ids = []
            for p in (px, pth, py):
                key = (chart, (p[0] % 1, p[1]))
                if key not in coord:
                    raise DomainError(f"distinguished crossing not found at {key}")
                ids.append(coord[key])
            self.x_points.append(ids[0])
            self.theta_points.append(ids[1])
            self.y_points.append(ids[2])
            cx = tuple(sum(c[k] for c in (px, pth, py)) / 3 for k in range(2))
            self.triangle_faces.append(self.face_of_point(chart, cx))
            self._check_clockwise(chart, (px, pth, py))
        self.z_face = self.bg_face
        self.w_face = None
        if w_probe is not None:
            self.w_face = self.face_of_point(*w_probe)

    def _check_clockwise(self, chart, pts):
        px, pth, py = pts
        area2 = cross2(pth[0] - px[0], pth[1] - px[1], py[0] - px[0], py[1] - px[1])
        if area2 <= 0:
            raise DomainError("triangle corners x, theta, y are not in clockwise order")

    # -- domains --------------------------------------------------------
    def curve_edges(self, ci):
        return [e for e in self.edges if e.curve == ci]

    def edge_coefficient(self, domain, e):
        return domain[e.left_face] - domain[e.right_face]

    def boundary_multiplicities(self, domain):
        """Per-curve boundary multiplicity; None when not a full multiple."""
        out = []
        for ci in range(len(self.curves)):
            vals = {self.edge_coefficient(domain, e) for e in self.curve_edges(ci)}
            out.append(vals.pop() if len(vals) == 1 else None)
        return out

    def periodic_matrix(self, with_z=True):
        rows = []
        nf = len(self.faces)
        for ci in range(len(self.curves)):
            es = self.curve_edges(ci)
            e0 = es[0]
            for e in es[1:]:
                row = [0] * nf
                row[e.left_face] += 1
                row[e.right_face] -= 1
                row[e0.left_face] -= 1
                row[e0.right_face] += 1
                rows.append(row)
        if with_z:
            row = [0] * nf
            row[self.z_face] = 1
            rows.append(row)
        return rows

    def periodic_domains(self):
        """Integer basis of triply-periodic domains (n_z = 0)."""
        return kernel_basis(self.periodic_matrix(with_z=True))

    def periodic_domains_full(self):
        """Kernel before the n_z cut (contains the whole-surface class)."""
        return kernel_basis(self.periodic_matrix(with_z=False))

    def doubly_periodic_lattice(self):
        """Lattice of Spin^c-preserving differences between triangle classes.

        Generated by the periodic domains whose boundary omits one of
        the three curve families entirely (n_z = 0 throughout); two
        triangle domains with the same corners represent the same
        Spin^c structure exactly when they differ by a sum of these.
        """
        gens = []
        nf = len(self.faces)
        for omit in ("alpha", "beta", "gamma"):
            rows = self.periodic_matrix(with_z=True)
            for ci, c in enumerate(self.curves):
                if c.family != omit:
                    continue
                e = self.curve_edges(ci)[0]
                row = [0] * nf
                row[e.left_face] += 1
                row[e.right_face] -= 1
                rows.append(row)
            gens.extend(kernel_basis(rows))
        from ..intlinalg import lattice_row_basis

        return lattice_row_basis(gens)

    # -- admissibility --------------------------------------------------
    def check_weak_admissibility(self, bound=5):
        basis = self.periodic_domains()
        rank = len(basis)
        if rank == 0:
            return AdmissibilityCertificate(True, "empty-lattice", bound, None)
        if rank == 1:
            b = basis[0]
            if all(x >= 0 for x in b) or all(x <= 0 for x in b):
                return AdmissibilityCertificate(False, "rank-1", bound, b)
            return AdmissibilityCertificate(True, "rank-1-sign", bound, None)
        if rank == 2:
            ray = _cone_nonneg_ray(basis)
            if ray is None:
                return AdmissibilityCertificate(True, "rank-2-cone", bound, None)
            dom = [ray[0] * a + ray[1] * b for a, b in zip(basis[0], basis[1])]
            return AdmissibilityCertificate(False, "rank-2-cone", bound, dom)
        for coeffs in itertools.product(range(-bound, bound + 1), repeat=rank):
            if all(c == 0 for c in coeffs):
                continue
            dom = [0] * len(self.faces)
            for c, b in zip(coeffs, basis):
                for i, x in enumerate(b):
                    dom[i] += c * x
            if all(x >= 0 for x in dom) or all(x <= 0 for x in dom):
                if any(dom):
                    return AdmissibilityCertificate(False, f"enumeration<={bound}", bound, dom)
        return AdmissibilityCertificate(True, f"enumeration<={bound}", bound, None)

    # -- triangle domains -----------------------------------------------
    def anchor_domain(self):
        dom = [0] * len(self.faces)
        for f in self.triangle_faces:
            dom[f] += 1
        return dom

    def corner_pattern(self, domain):
        """Map (curve, crossing) -> out-minus-in jump of the domain."""
        out = {}
        for ci in range(len(self.curves)):
            incoming = {}
            outgoing = {}
            for e in self.curve_edges(ci):
                outgoing[e.src] = e
                incoming[e.dst] = e
            for v in outgoing:
                c_out = self.edge_coefficient(domain, outgoing[v])
                c_in = self.edge_coefficient(domain, incoming[v])
                out[(ci, v)] = c_out - c_in
        return out

    def enumerate_nonneg_triangles(self, bound=5):
        """All nonnegative triangle domains in the anchor's Spin^c class.

        Enumerates candidate far-corner tuples y'; for each, solves for
        an integer domain with the transported corner pattern, n_z = 0,
        then scans the periodic-domain lattice within ``bound``.
        Raises ResourceLimitError when the lattice has a nonnegative
        direction (enumeration would not be meaningful).
        """
        cert = self.check_weak_admissibility(bound)
        if not cert.admissible:
            raise ResourceLimitError("diagram not weakly admissible: unbounded enumeration")
        anchor = self.anchor_domain()
        base_pattern = self.corner_pattern(anchor)
        lattice = self.doubly_periodic_lattice()
        alpha_ids = [ci for ci, c in enumerate(self.curves) if c.family == "alpha"]
        gamma_ids = [ci for ci, c in enumerate(self.curves) if c.family == "gamma"]
        # candidate y'_i: crossings between alpha_i and gamma_i
        candidates = []
        for i, (ai, gi) in enumerate(zip(alpha_ids, gamma_ids)):
            opts = []
            for c in self.crossings:
                cs = {self.curves[s[0]].family for s in c.strands}
                ids = {s[0] for s in c.strands}
                if cs == {"alpha", "gamma"} and ids == {ai, gi}:
                    opts.append(c.id)
            candidates.append(opts)
        results = []
        seen = set()
        for yprime in itertools.product(*candidates):
            if list(yprime) == self.y_points:
                dom = anchor[:]
            else:
                conn = self._solve_connector(yprime, alpha_ids, gamma_ids)
                if conn is None:
                    continue
                dom = [a + c for a, c in zip(anchor, conn)]
            for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(lattice)):
                cand = dom[:]
                for cc, b in zip(coeffs, lattice):
                    for i, x in enumerate(b):
                        cand[i] += cc * x
                if all(x >= 0 for x in cand) and tuple(cand) not in seen:
                    seen.add(tuple(cand))
                    results.append((tuple(yprime), cand))
        return results

    def _solve_connector(self, yprime, alpha_ids, gamma_ids):
        """Domain of a class connecting the anchor corners to new y'-corners.

        Boundary lies on alpha and gamma curves only (beta multiplicities
        vanish), corners move the y-points, n_z = 0.  Adding it to the
        anchor stays in the anchor's Spin^c class.
        """
        anchor = self.anchor_domain()
        base_pattern = self.corner_pattern(anchor)
        target = {}
        for i, (ai, gi) in enumerate(zip(alpha_ids, gamma_ids)):
            y_old, y_new = self.y_points[i], yprime[i]
            if y_new == y_old:
                continue
            for ci in (ai, gi):
                val = base_pattern[(ci, y_old)]
                target[(ci, y_old)] = -val
                target[(ci, y_new)] = val
        nf = len(self.faces)
        rows, rhs = [], []
        for ci, curve in enumerate(self.curves):
            incoming, outgoing = {}, {}
            for e in self.curve_edges(ci):
                outgoing[e.src] = e
                incoming[e.dst] = e
            for v in outgoing:
                row = [0] * nf
                eo, ei = outgoing[v], incoming[v]
                row[eo.left_face] += 1
                row[eo.right_face] -= 1
                row[ei.left_face] -= 1
                row[ei.right_face] += 1
                rows.append(row)
                rhs.append(target.get((ci, v), 0))
            if curve.family == "beta":
                e0 = self.curve_edges(ci)[0]
                row = [0] * nf
                row[e0.left_face] += 1
                row[e0.right_face] -= 1
                rows.append(row)
                rhs.append(0)
        row = [0] * nf
        row[self.z_face] = 1
        rows.append(row)
        rhs.append(0)
        return solve_integer(rows, rhs)

    # -- evaluations ------------------------------------------------------
    def euler_measure(self, domain):
        total = Fraction(0)
        for f in self.faces:
            total += domain[f.id] * (Fraction(f.chi) - Fraction(f.corners, 4))
        return total

    def boundary_coefficient_sum(self, domain):
        mults = self.boundary_multiplicities(domain)
        if any(m is None for m in mults):
            raise DomainError("domain is not periodic: boundary not full curves")
        return sum(mults)

    def chern_evaluation(self, domain):
        """< c1(s_z of the small-triangle class), [domain] > for periodic domains."""
        e = self.euler_measure(domain)
        b = self.boundary_coefficient_sum(domain)
        nz = domain[self.z_face]
        sigma = self.spider_number(domain)
        return e + b - 2 * nz + 2 * sigma

    # -- dual spider -------------------------------------------------------
    def spider_number(self, domain, variant=0):
        """Dual spider number for the small-triangle class against a domain.

        For each small triangle: the multiplicity at an interior point,
        plus signed crossings of three short paths (to the alpha, gamma
        and beta sides) with the leftward push-offs of the domain's
        boundary curves.  ``variant`` selects a different set of path
        endpoints; the total must not depend on it.
        """
        mults = self.boundary_multiplicities(domain)
        if any(m is None for m in mults):
            raise DomainError("domain is not periodic")
        total = Fraction(0)
        for i in range(len(self.triangle_faces)):
            total += domain[self.triangle_faces[i]]
            total += self._spider_local(i, mults, variant)
        assert total.denominator == 1
        return int(total)

    def _spider_local(self, i, mults, variant):
        xc = self.crossings[self.x_points[i]]
        tc = self.crossings[self.theta_points[i]]
        yc = self.crossings[self.y_points[i]]
        chart = xc.chart
        px, pth, py = xc.point, tc.point, yc.point
        u = tuple((px[k] + pth[k] + py[k]) / 3 for k in range(2))
        lam = Fraction(1, 2) if variant == 0 else Fraction(1, 4)
        mid = lambda a, b: tuple(a[k] + lam * (b[k] - a[k]) for k in range(2))
        paths = {
            "alpha": (u, mid(px, py)),
            "beta": (u, mid(px, pth)),
            "gamma": (u, mid(pth, py)),
        }
        total = 0
        for fam, (a, b) in paths.items():
            for ci, curve in enumerate(self.curves):
                if curve.family != fam or mults[ci] == 0 or curve.chart != chart:
                    continue
                total += mults[ci] * self._pushoff_crossings(ci, (a, b))
        return total

    def _pushoff_crossings(self, ci, path_seg):
        """Signed crossings of a short path with the pushed-off curve."""
        a, b = path_seg
        total = 0
        segs = []
        prev_end = None
        for e in self.curve_edges(ci):
            for (p, q) in e.geometry:
                dx, dy = q[0] - p[0], q[1] - p[1]
                nx, ny = -dy * EPS, dx * EPS
                p2 = (p[0] + nx, p[1] + ny)
                q2 = (q[0] + nx, q[1] + ny)
                if prev_end is not None and prev_end != p2 and _close(prev_end, p2):
                    segs.append((prev_end, p2))
                segs.append((p2, q2))
                prev_end = q2
        for (p, q) in segs:
            for ds in self._near_shifts(p, q, a, b):
                pp = (p[0] + ds, p[1])
                qq = (q[0] + ds, q[1])
                hit = seg_intersect(pp, qq, a, b)
                if hit is not None:
                    sign = 1 if cross2(qq[0] - pp[0], qq[1] - pp[1], b[0] - a[0], b[1] - a[1]) > 0 else -1
                    total += sign
        return total

    @staticmethod
    def _near_shifts(p, q, a, b):
        lo = min(a[0], b[0]) - max(p[0], q[0])
        hi = max(a[0], b[0]) - min(p[0], q[0])
        from .geometry import _ceil, _floor
        return range(_ceil(lo), _floor(hi) + 1)

    # -- serialization ----------------------------------------------------
    def to_json(self):
        return {
            "layout": self.layout,
            "genus": self.expected_genus,
            "regions": [
                {"id": f.id, "chi": f.chi, "corners": f.corners, "background": f.id == self.bg_face}
                for f in self.faces
            ],
            "curves": [
                {"id": i, "family": c.family, "index": c.index,
                 "edges": [e.id for e in self.curve_edges(i)]}
                for i, c in enumerate(self.curves)
            ],
            "edges": [
                {"id": e.id, "curve": e.curve, "src": e.src, "dst": e.dst,
                 "left": e.left_face, "right": e.right_face}
                for e in self.edges
            ],
            "basepoints": {"z": self.z_face, "w": self.w_face},
            "distinguished": {
                "x": self.x_points, "theta": self.theta_points, "y": self.y_points,
                "triangles": self.triangle_faces,
            },
        }


@dataclass
class AdmissibilityCertificate:
    admissible: bool
    method: str
    bound: int
    counterexample: list | None

    def to_json(self):
        return {
            "admissible": self.admissible,
            "method": self.method,
            "bound": self.bound,
            "counterexample": self.counterexample,
            "spider_paths": "canonical-in-face",
        }


def _interp(p, q, f):
    return (p[0] + (q[0] - p[0]) * f, p[1] + (q[1] - p[1]) * f)


def _ray_lo(a, b, pt):
    from .geometry import _ceil
    return _ceil(pt[0] - max(a[0], b[0]))


def _ray_hi(a, b, pt):
    from .geometry import _floor
    return _floor(pt[0] - min(a[0], b[0]))


def _close(p, q):
    return abs(p[0] - q[0]) < Fraction(1, 2**10) and abs(p[1] - q[1]) < Fraction(1, 2**10)


def _cone_nonneg_ray(basis):
    """Nonzero integer (m, n) with m*B1 + n*B2 componentwise >= 0, or None."""
    b1, b2 = basis
    # feasible directions form a closed convex cone in the plane
    # cut out by the half-planes m*b1[i] + n*b2[i] >= 0
    constraints = sorted({(x, y) for x, y in zip(b1, b2)})
    # sample candidate rays: constraint boundaries and their negatives
    cands = []
    for (x, y) in constraints:
        cands.append((-y, x))
        cands.append((y, -x))
    cands += [(1, 0), (-1, 0), (0, 1), (0, -1)]
    for m, n in cands:
        if m == 0 and n == 0:
            continue
        if all(m * x + n * y >= 0 for x, y in constraints):
            return (m, n)
    return None
