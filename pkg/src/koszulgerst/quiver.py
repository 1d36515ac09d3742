"""Quivers, paths and exact linear combinations of paths.

Paths concatenate left to right: in a path (a1, a2, ...) the terminal vertex
of a1 is the origin of a2, and the product of two paths u, v is u then v
(zero when t(u) != o(v)).  A PathVector is an element of the free path
algebra kQ; it knows nothing about relations, which live in rewriting.py.
"""

from typing import NamedTuple

from .errors import NonQuadraticRelation, ParseError


class Path(NamedTuple):
    """A path in a quiver: explicit origin plus a composable arrow tuple.

    The origin is redundant for nonempty paths but makes length-0 paths
    (vertex idempotents) first-class values.
    """

    o: int
    arrows: tuple

    def __len__(self):
        return len(self.arrows)


class Quiver:
    def __init__(self, vertex_names, arrows):
        """arrows: iterable of (name, origin_name, target_name)."""
        self.vertex_names = tuple(vertex_names)
        if len(set(self.vertex_names)) != len(self.vertex_names):
            raise ParseError("duplicate vertex names")
        self.vertex_index = {v: i for i, v in enumerate(self.vertex_names)}
        self.arrow_names = []
        self.arrow_o = []
        self.arrow_t = []
        for name, o, t in arrows:
            if name in self.vertex_index or name in self.arrow_names:
                raise ParseError(f"duplicate name {name!r}")
            if o not in self.vertex_index or t not in self.vertex_index:
                raise ParseError(f"arrow {name!r} has unknown endpoint")
            self.arrow_names.append(name)
            self.arrow_o.append(self.vertex_index[o])
            self.arrow_t.append(self.vertex_index[t])
        self.arrow_names = tuple(self.arrow_names)
        self.arrow_index = {a: i for i, a in enumerate(self.arrow_names)}

    @property
    def num_vertices(self):
        return len(self.vertex_names)

    @property
    def num_arrows(self):
        return len(self.arrow_names)

    def vertex_path(self, v):
        return Path(v, ())

    def arrow_path(self, a):
        return Path(self.arrow_o[a], (a,))

    def path_target(self, path):
        if path.arrows:
            return self.arrow_t[path.arrows[-1]]
        return path.o

    def is_composable(self, path):
        v = path.o
        for a in path.arrows:
            if self.arrow_o[a] != v:
                return False
            v = self.arrow_t[a]
        return True

    def compose(self, u, v):
        """Concatenation u.v, or None when the endpoints do not match."""
        if self.path_target(u) != v.o:
            return None
        return Path(u.o, u.arrows + v.arrows)

    def format_path(self, path):
        if not path.arrows:
            return f"e{self.vertex_names[path.o]}"
        return ".".join(self.arrow_names[a] for a in path.arrows)


class PathVector:
    """Exact linear combination of paths in kQ (no zero coefficients)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for path, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if coeff != field.zero:
                    self.terms[path] = coeff

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def single(cls, field, path, coeff=None):
        return cls(field, {path: field.one if coeff is None else coeff})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.field != other.field:
            from .errors import FieldMismatch
            raise FieldMismatch("cannot add path vectors over different fields")
        f = self.field
        out = dict(self.terms)
        for p, c in other.terms.items():
            new = f.add(out.get(p, f.zero), c)
            if new == f.zero:
                out.pop(p, None)
            else:
                out[p] = new
        return PathVector(f, out)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))

    def scale(self, coeff):
        f = self.field
        if coeff == f.zero:
            return PathVector(f)
        return PathVector(f, {p: f.mul(c, coeff) for p, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, PathVector) and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def lengths(self):
        return {len(p.arrows) for p in self.terms}

    def is_homogeneous(self):
        return len(self.lengths()) <= 1

    def is_uniform(self, quiver):
        pairs = {(p.o, quiver.path_target(p)) for p in self.terms}
        return len(pairs) <= 1

    def vertex_pair(self, quiver):
        """(origin, target) of a nonzero uniform vector."""
        for p in self.terms:
            return (p.o, quiver.path_target(p))
        return None

    def format(self, quiver):
        if not self.terms:
            return "0"
        bits = []
        for path in sorted(self.terms, key=lambda p: (len(p.arrows), p.arrows, p.o)):
            c = self.terms[path]
            cs = self.field.format(c)
            word = quiver.format_path(path)
            if cs == "1":
                bits.append(word)
            elif cs == "-1":
                bits.append(f"-{word}")
            else:
                bits.append(f"{cs}*{word}")
        return " + ".join(bits).replace("+ -", "- ")


def free_multiply(quiver, a, b):
    """Product in the free path algebra kQ (concatenation, no relations)."""
    f = a.field
    out = {}
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            pq = quiver.compose(p, q)
            if pq is None:
                continue
            new = f.add(out.get(pq, f.zero), f.mul(cp, cq))
            if new == f.zero:
                out.pop(pq, None)
            else:
                out[pq] = new
    return PathVector(f, out)


def make_order_key(arrow_rank):
    """Length-lex comparison key: key(p) < key(q) iff p > q in length-lex.

    arrow_rank[a] = 0 for the largest arrow.  Sorting paths by this key lists
    them in descending order, so leading terms come first.
    """

    def key(path):
        return (-len(path.arrows), tuple(arrow_rank[a] for a in path.arrows))

    return key


class QuadraticPresentation:
    """A quiver with uniform quadratic relations and a fixed arrow order."""

    def __init__(self, quiver, relations, arrow_order=None, field=None, params=None):
        self.quiver = quiver
        self.relations = list(relations)
        if field is None:
            if not self.relations:
                raise ValueError("field required when there are no relations")
            field = self.relations[0].field
        self.field = field
        self.params = dict(params or {})
        for rel in self.relations:
            if rel.field != field:
                raise NonQuadraticRelation("relations over mixed fields")
            if rel.is_zero():
                raise NonQuadraticRelation("zero relation")
            if rel.lengths() != {2}:
                raise NonQuadraticRelation(
                    f"relation {rel.format(quiver)!r} is not purely quadratic")
            if not rel.is_uniform(quiver):
                raise NonQuadraticRelation(
                    f"relation {rel.format(quiver)!r} is not uniform")
        if arrow_order is None:
            arrow_order = tuple(range(quiver.num_arrows))
        else:
            arrow_order = tuple(arrow_order)
            if sorted(arrow_order) != list(range(quiver.num_arrows)):
                raise ParseError("arrow order must list every arrow exactly once")
        self.arrow_order = arrow_order  # largest first
        self.arrow_rank = [0] * quiver.num_arrows
        for rank, a in enumerate(arrow_order):
            self.arrow_rank[a] = rank
        self.order_key = make_order_key(self.arrow_rank)
