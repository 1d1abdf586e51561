"""K_0 of a squares category as a finitely presented abelian group.

Generators are the objects; relations are [O] = 0 and [A] + [D] = [B] + [C]
for every square.  The quotient is read off a Smith normal form computed
with exact Python integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from .catcore import Report, ordered


class IntMatrix:
    """Dense integer matrix stored as a list of row lists."""

    def __init__(self, rows, ncols: int | None = None):
        self.rows = [[int(x) for x in r] for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)], c)

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.rows == other.rows

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
                         other.ncols)

    def copy(self):
        return IntMatrix([list(r) for r in self.rows], self.ncols)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k]), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1

    def __repr__(self):
        return f"IntMatrix({self.rows})"


@dataclass
class SNFResult:
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.shape))]


def smith_normal_form(a: IntMatrix) -> SNFResult:
    """U·A·V = D with U, V unimodular and d1 | d2 | ... on the diagonal."""
    m, n = a.shape
    D = [list(r) for r in a.rows]
    U = IntMatrix.identity(m).rows
    V = IntMatrix.identity(n).rows

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row dst += q * row src
        if q:
            D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        if q:
            for r in D:
                r[dst] += q * r[src]
            for r in V:
                r[dst] += q * r[src]

    for t in range(min(m, n)):
        # pivot: smallest nonzero entry in the remaining block
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                add_row(i, t, -(D[i][t] // p))
                clean &= D[i][t] == 0
            for j in range(t + 1, n):
                add_col(j, t, -(D[t][j] // p))
                clean &= D[t][j] == 0
            if not clean:
                continue
            # divisibility: fold in any entry the pivot does not divide
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if best is None:
            break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return SNFResult(IntMatrix(D, n), IntMatrix(U, m), IntMatrix(V, n))


def check_snf(a: IntMatrix, res: SNFResult) -> list[str]:
    """Re-multiply and inspect; returns violations."""
    v = []
    if res.U @ a @ res.V != res.D:
        v.append("U·A·V != D")
    m, n = a.shape
    for i in range(m):
        for j in range(n):
            if i != j and res.D[i, j]:
                v.append(f"D has off-diagonal entry at {(i, j)}")
    diag = res.diagonal
    if any(x < 0 for x in diag):
        v.append("negative diagonal entry")
    for x, y in zip(diag, diag[1:]):
        if (x == 0 and y != 0) or (x and y % x):
            v.append(f"divisibility chain broken: {x} does not divide {y}")
    for name, M in (("U", res.U), ("V", res.V)):
        if abs(M.det()) != 1:
            v.append(f"{name} is not unimodular")
    return v


# K_0

@dataclass
class K0Result:
    objects: tuple
    free_rank: int
    torsion: tuple  # invariant factors > 1
    images: dict = field(default_factory=dict)  # object -> (free coords, torsion coords)
    _V: IntMatrix | None = None
    _diag: tuple = ()

    def element(self, combo: dict):
        """Image of a formal combination {object: coefficient}."""
        free = [0] * self.free_rank
        tors = [0] * len(self.torsion)
        for x, c in combo.items():
            if x not in self.images:
                raise KeyError(f"unknown object {x!r}")
            f, t = self.images[x]
            free = [a + c * b for a, b in zip(free, f)]
            tors = [a + c * b for a, b in zip(tors, t)]
        return tuple(free), tuple(b % q for b, q in zip(tors, self.torsion))

    def is_zero(self, combo: dict) -> bool:
        f, t = self.element(combo)
        return not any(f) and not any(t)

    def describe(self, names=None) -> str:
        tors = ", ".join(f"Z/{q}" for q in self.torsion) or "none"
        s = f"free rank {self.free_rank}, torsion {tors}"
        if self.free_rank == 1 and not self.torsion:
            # express every class as a multiple of the first object of image +-1
            gen = next((x for x in self.objects if self.images[x][0][0] == 1), None)
            if gen is not None:
                nm = names or (lambda x: str(x))
                parts = [f"[{nm(x)}] = {self.images[x][0][0]}·[{nm(gen)}]"
                         for x in self.objects if x != gen and self.images[x][0][0] != 0]
                s += ", " + ", ".join(parts) if parts else f", generator [{nm(gen)}]"
        return s


def relation_matrix(d) -> tuple[tuple, IntMatrix]:
    """Rows: [O], then [A] + [D] - [B] - [C] for each square; duplicates and zero rows dropped."""
    objs = tuple(d.objects)
    idx = {x: k for k, x in enumerate(objs)}
    rows = set()
    e = [0] * len(objs)
    e[idx[d.basepoint]] = 1
    rows.add(tuple(e))
    for sq in d.squares:
        A, B, C, D = d.corners(sq)
        r = [0] * len(objs)
        r[idx[A]] += 1
        r[idx[D]] += 1
        r[idx[B]] -= 1
        r[idx[C]] -= 1
        if any(r):
            rows.add(tuple(r))
    return objs, IntMatrix(sorted(rows), len(objs))


def k0_group(d) -> K0Result:
    objs, R = relation_matrix(d)
    n = len(objs)
    res = smith_normal_form(R)
    diag = res.diagonal + [0] * (n - len(res.diagonal))
    # a row vector x maps to x·V in the diagonal basis
    free_idx = [i for i, q in enumerate(diag) if q == 0]
    tors_idx = [i for i, q in enumerate(diag) if q > 1]
    images = {}
    for j, x in enumerate(objs):
        row = res.V.rows[j]
        images[x] = (tuple(row[i] for i in free_idx),
                     tuple(row[i] % diag[i] for i in tors_idx))
    # normalise the sign of a rank-one free part so the first nonzero class is positive
    if len(free_idx) == 1:
        first = next((images[x][0][0] for x in objs if images[x][0][0]), 1)
        if first < 0:
            images = {x: ((-f[0],), t) for x, (f, t) in images.items()}
    return K0Result(objs, len(free_idx), tuple(diag[i] for i in tors_idx), images,
                    res.V, tuple(diag))


def _combo(z) -> dict:
    if isinstance(z, dict):
        return z
    out: dict = {}
    for x in z:
        out[x] = out.get(x, 0) + 1
    return out


def k0_class_equal(d, z1, z2, k0: K0Result | None = None) -> bool:
    """Compare formal combinations (dicts object -> int, or iterables of objects)."""
    k0 = k0 or k0_group(d)
    a, b = _combo(z1), _combo(z2)
    diff = dict(a)
    for x, c in b.items():
        diff[x] = diff.get(x, 0) - c
    return k0.is_zero(diff)


def check_sum_existence(d, pair_filter=None) -> Report:
    """For every ordered pair (A, B): some X with squares (A↣X, A↠O, X↠B, O↣B) and (B↣X, B↠O, X↠A, O↣A)."""
    o = d.basepoint
    H = d.hcat
    good: dict = {}  # (A, B) -> set of X with the first square
    for sq in d.squares:
        if sq[3] == d.zero_h(H.dst(sq[3])) and H.src(sq[3]) == o:
            A, X, _, B = d.corners(sq)
            if sq[1] == d.zero_v(A):
                good.setdefault((A, B), set()).add(X)
    v = []
    details = []
    for A in d.objects:
        for B in d.objects:
            if pair_filter is not None and not pair_filter(A, B):
                continue
            xs = good.get((A, B), set()) & good.get((B, A), set())
            if not xs:
                v.append(f"no sum for ({A!r}, {B!r})")
                break
            details.append(f"({A!r}, {B!r}): X = {ordered(xs)[0]!r}")
        if v:
            break
    return Report("sum existence", not v, v, details)


def check_k0_additivity(d, ext=None) -> Report:
    """The two maps K0(E□) -> K0 sending a square to [B]+[C] and to [A]+[D].

    Both must kill the relations of E□ (so they are homomorphisms) and agree
    on every generator.
    """
    from .double import extension_category

    E = ext if ext is not None else extension_category(d)
    k0 = k0_group(d)

    def m1(s):
        A, B, C, D = d.corners(s)
        return {B: 1, C: 1} if B != C else {B: 2}

    def m2(s):
        A, B, C, D = d.corners(s)
        return {A: 1, D: 1} if A != D else {A: 2}

    def push(fn, row_objs, row):
        out: dict = {}
        for s, c in zip(row_objs, row):
            for x, k in fn(s).items():
                out[x] = out.get(x, 0) + c * k
        return out

    v = []
    for s in E.objects:
        a, b = push(m1, [s], [1]), push(m2, [s], [1])
        diff = dict(a)
        for x, c in b.items():
            diff[x] = diff.get(x, 0) - c
        if not k0.is_zero(diff):
            v.append(f"maps disagree on generator {s!r}")
    objs, R = relation_matrix(E)
    for name, fn in (("ur+bl", m1), ("ul+br", m2)):
        for row in R.rows:
            if not k0.is_zero(push(fn, objs, row)):
                v.append(f"map {name} does not kill relation {row}")
                break
    return Report("K0 additivity", not v, v,
                  [f"{len(E.objects)} generators, {R.nrows} relation rows of E"])
