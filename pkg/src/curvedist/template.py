"""Parametric arc templates on a split surface and their expansion.

A template records a maximal arc system on the surface cut along the
horizontal curve: the cyclic order of arc-class endpoint groups on the
two boundary circles, each class tagged by which circles carry its
endpoints (pm / pp / mm) and by how parallel copies pair off.
Expanding at a weight vector replaces each group by that many
consecutive slots; enumerating boundary gluings of the result feeds
the distance classifier, and the class-level dual graph generates the
weight constraint system.

Copy pairing is forced by embeddability: copies of a class with ends
on both circles pair in like row order ("parallel" — the gluing
aligns the rows against the circles' induced orientations), while
copies with both ends on one circle nest ("reversed").  The bundled
genus-2 templates carry the validated choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .circuits import DualGraph, beta_dual_graph
from .errors import TemplateError
from .faces import faces_any
from .gluing import enumerate_gluings
from .ilp import MM, PM, PP, ArcClass, ConstraintSystem, build_constraints
from .ladder import Ladder

PARALLEL = "parallel"
REVERSED = "reversed"


@dataclass(frozen=True)
class ArcTemplate:
    name: str
    genus: int
    separating: bool
    classes: tuple[ArcClass, ...]  # indices 1..n in order
    top_groups: tuple[int, ...]    # class indices in cyclic boundary order
    bottom_groups: tuple[int, ...]

    def __post_init__(self):
        n = len(self.classes)
        for pos, cls in enumerate(self.classes, start=1):
            if cls.index != pos:
                raise TemplateError("classes must be listed as w1..wn in order")
            if cls.orientation not in (PARALLEL, REVERSED):
                raise TemplateError(f"unknown orientation {cls.orientation!r}")
        expected = {
            PM: (1, 1),
            MM: (2, 0),  # top row reads the circle that mm arcs live on
            PP: (0, 2),
        }
        for cls in self.classes:
            t = self.top_groups.count(cls.index)
            b = self.bottom_groups.count(cls.index)
            if (t, b) != expected[cls.kind]:
                raise TemplateError(
                    f"class w{cls.index} ({cls.kind}) has groups top={t} "
                    f"bottom={b}, expected {expected[cls.kind]}"
                )
        for idx in self.top_groups + self.bottom_groups:
            if not 1 <= idx <= n:
                raise TemplateError(f"group refers to unknown class w{idx}")

    @property
    def n_classes(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class ExpandedConfiguration:
    """Concrete rows produced from a template and a weight vector."""

    template: ArcTemplate
    weights: tuple[int, ...]
    ladder: Ladder

    @property
    def k(self) -> int:
        return self.ladder.k


def expand(template: ArcTemplate, weights) -> ExpandedConfiguration:
    """Place ``weights[i]`` parallel copies of each class wᵢ₊₁.

    Fresh labels 0..k-1; the second endpoint group of a class pairs
    its copies in row order (parallel) or reverse (reversed).
    """
    weights = tuple(int(w) for w in weights)
    if len(weights) != template.n_classes:
        raise TemplateError(
            f"{len(weights)} weights for {template.n_classes} classes"
        )
    if any(w < 0 for w in weights):
        raise TemplateError("weights must be nonnegative", code="NEGATIVE_WEIGHT")
    pp_total = sum(w for w, c in zip(weights, template.classes) if c.kind == PP)
    mm_total = sum(w for w, c in zip(weights, template.classes) if c.kind == MM)
    if pp_total != mm_total:
        raise TemplateError(
            f"one-circle weights unbalanced ({pp_total} vs {mm_total}); "
            "the rows cannot glue",
            code="UNBALANCED",
        )
    if sum(weights) == 0:
        raise TemplateError("all weights zero", code="EMPTY")

    base: dict[int, int] = {}
    offset = 0
    for cls in template.classes:
        base[cls.index] = offset
        offset += weights[cls.index - 1]

    seen: set[int] = set()
    rows: list[list[int]] = [[], []]
    for row, groups in ((0, template.top_groups), (1, template.bottom_groups)):
        for idx in groups:
            w = weights[idx - 1]
            cls = template.classes[idx - 1]
            second = idx in seen
            seen.add(idx)
            for c in range(w):
                copy = c
                if second and cls.orientation == REVERSED:
                    copy = w - 1 - c
                rows[row].append(base[idx] + copy)
    top, bottom = rows
    if len(top) != len(bottom):
        raise TemplateError(
            f"row lengths differ ({len(top)} vs {len(bottom)})",
            code="UNBALANCED",
        )
    return ExpandedConfiguration(template, weights, Ladder.from_rows(top, bottom))


def dual_graph_of_template(template: ArcTemplate) -> DualGraph:
    """Dual graph of the arc system itself: one edge per class.

    Computed from the all-ones expansion (one copy per class) glued at
    offset zero: the complementary regions of the arc system in the
    cut surface, and which classes they touch, do not depend on the
    gluing.  Requires as many pp as mm classes so that all-ones rows
    have equal length.
    """
    n_pp = sum(1 for c in template.classes if c.kind == PP)
    n_mm = sum(1 for c in template.classes if c.kind == MM)
    if n_pp != n_mm:
        raise TemplateError(
            "template dual graph needs equally many pp and mm classes "
            f"(got {n_pp} vs {n_mm})"
        )
    cfg = expand(template, (1,) * template.n_classes)
    graph = beta_dual_graph(faces_any(cfg.ladder))
    # all-ones labels are 0..n-1 in class order; relabel to class indices
    edges = tuple((u, v, lab + 1) for u, v, lab in graph.edges)
    return DualGraph(graph.n_vertices, edges)


def template_constraints(template: ArcTemplate) -> ConstraintSystem:
    return build_constraints(
        list(template.classes), dual_graph_of_template(template), template.genus
    )


@dataclass(frozen=True)
class CatalogRecord:
    p: int
    weights: tuple[int, ...]
    offset: int
    k: int
    distance: str


def pipeline(
    template: ArcTemplate,
    p_min: int,
    p_max: int,
    circuit_cap: int | None = None,
) -> list[CatalogRecord]:
    """Classify every single-curve gluing of every weight solution.

    For each objective value P in range, each weight solution, and
    each boundary gluing joining the arcs into one curve: one record
    with the pair's distance on the template's surface.
    """
    from .ilp import enumerate_solutions  # local to avoid cycle at import

    system = template_constraints(template)
    records = []
    for p in range(p_min, p_max + 1):
        for weights in enumerate_solutions(system, p):
            cfg = expand(template, weights)
            for g in enumerate_gluings(
                cfg.ladder,
                classify=True,
                ambient_genus=template.genus,
                circuit_cap=circuit_cap,
            ):
                if g.single_curve:
                    records.append(
                        CatalogRecord(
                            p, weights, g.offset, cfg.k, g.verdict.verdict
                        )
                    )
    return records


def distance4_weights(records) -> set[tuple[int, ...]]:
    """Weight vectors with at least one distance-4+ gluing."""
    return {r.weights for r in records if r.distance == "4+"}


# --- template file format -------------------------------------------------
#
#   # optional comment lines
#   name <token>
#   genus <int>
#   separating yes|no
#   class w<i> pm|pp|mm parallel|reversed    (one line per class, in order)
#   top w<i> w<j> ...                        (cyclic group order, top circle)
#   bottom w<i> w<j> ...


def parse_template(text: str, name: str = "") -> ArcTemplate:
    genus = None
    separating = None
    classes: list[ArcClass] = []
    top: list[int] | None = None
    bottom: list[int] | None = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        key = fields[0]
        try:
            if key == "name" and len(fields) == 2:
                name = fields[1]
            elif key == "genus" and len(fields) == 2:
                genus = int(fields[1])
            elif key == "separating" and len(fields) == 2:
                separating = {"yes": True, "no": False}[fields[1]]
            elif key == "class" and len(fields) == 4:
                classes.append(
                    ArcClass(_class_index(fields[1]), fields[2], fields[3])
                )
            elif key in ("top", "bottom"):
                groups = [_class_index(tok) for tok in fields[1:]]
                if key == "top":
                    top = groups
                else:
                    bottom = groups
            else:
                raise TemplateError(f"bad template line: {raw!r}")
        except (ValueError, KeyError) as exc:
            raise TemplateError(f"bad template line: {raw!r}") from exc
    if genus is None or separating is None or top is None or bottom is None:
        raise TemplateError("template needs genus, separating, top and bottom")
    if not classes:
        raise TemplateError("template declares no classes")
    return ArcTemplate(
        name, genus, separating, tuple(classes), tuple(top), tuple(bottom)
    )


def _class_index(token: str) -> int:
    if not token.startswith("w"):
        raise ValueError(token)
    return int(token[1:])


def render_template(template: ArcTemplate) -> str:
    lines = [
        f"name {template.name}" if template.name else "# unnamed template",
        f"genus {template.genus}",
        f"separating {'yes' if template.separating else 'no'}",
    ]
    for cls in template.classes:
        lines.append(f"class w{cls.index} {cls.kind} {cls.orientation}")
    lines.append("top " + " ".join(f"w{i}" for i in template.top_groups))
    lines.append("bottom " + " ".join(f"w{i}" for i in template.bottom_groups))
    return "\n".join(lines) + "\n"


BUILTIN_TEMPLATES = ("genus2-nonseparating", "genus2-separating")


def load_template_file(path: str) -> ArcTemplate:
    with open(path, encoding="utf-8") as fh:
        return parse_template(fh.read())


def builtin_template(name: str) -> ArcTemplate:
    if name not in BUILTIN_TEMPLATES:
        raise TemplateError(
            f"unknown template {name!r}; bundled: {', '.join(BUILTIN_TEMPLATES)}"
        )
    text = (
        resources.files("curvedist.templates")
        .joinpath(name.replace("-", "_") + ".txt")
        .read_text(encoding="utf-8")
    )
    return parse_template(text, name=name)


def resolve_template(spec: str) -> ArcTemplate:
    """CLI helper: a bundled name or a path to a template file."""
    if spec in BUILTIN_TEMPLATES:
        return builtin_template(spec)
    return load_template_file(spec)
