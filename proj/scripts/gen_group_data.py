#!/usr/bin/env python3
"""Regenerates the bundled permutation generator files in core/data/.

Constructions:
  * M24 on P^1(F_23) as <x+1, 2x, -1/x, delta>, delta the Mathieu twist
    (x -> x^3/9 on squares, 9x^3 otherwise).
  * M23, M22 as one- and two-point stabilizers of M24.
  * M11 (degree 11) and M12 from the classical 11-cycle generators.
  * M11 in its transitive degree-12 action, via the coset action of M11
    on an index-12 subgroup isomorphic to L_2(11).
  * M10 as <PSL_2(9), frobenius*g> inside PGammaL_2(9), g of nonsquare
    determinant.
  * Sym(5) acting on the ten 2-subsets of {1..5}.

Every file records the expected group order; loaders must verify it.
Requires sympy.
"""
import itertools, random
from sympy.combinatorics import Permutation, PermutationGroup

OUT = __file__.rsplit('/', 2)[0] + '/core/data'

def perm_to_cycles(images):
    n = len(images)
    seen = [False]*n
    out = []
    for i in range(n):
        if seen[i] or images[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = images[i]
        while j != i:
            cyc.append(j); seen[j] = True; j = images[j]
        out.append(cyc)
    if not out:
        return "()"
    return "".join("(" + ",".join(str(x+1) for x in c) + ")" for c in out)

def write_group(name, degree, perms, order, comment):
    path = f"{OUT}/{name}.grp"
    with open(path, "w") as f:
        f.write(f"# {comment}\n")
        f.write(f"degree {degree}\n")
        f.write(f"order {order}\n")
        for p in perms:
            f.write(perm_to_cycles(p) + "\n")
    print(f"wrote {path} (degree {degree}, order {order})")

# ---- M24 and friends -------------------------------------------------
p = 23
INF = 23
squares = {pow(i, 2, p) for i in range(1, p)}

def mk(f):
    return [f(x) for x in range(23)] + [f(INF)]

alpha = mk(lambda x: INF if x == INF else (x+1) % p)
beta  = mk(lambda x: INF if x == INF else (2*x) % p)
gamma = mk(lambda x: 0 if x == INF else (INF if x == 0 else (-pow(x, p-2, p)) % p))
def delta_f(x):
    if x in (INF, 0): return x
    x3 = pow(x, 3, p)
    return (x3 * pow(9, p-2, p)) % p if x in squares else (9*x3) % p
delta = mk(delta_f)

m24 = PermutationGroup([Permutation(g) for g in (alpha, beta, gamma, delta)])
assert m24.order() == 244823040
write_group("m24", 24, (alpha, beta, gamma, delta), 244823040,
            "M24 on the projective line over F_23; point i = field value i-1, point 24 = infinity")

def relabel_stabilizer(G, fixed):
    """Generators of the stabilizer of the given points, renumbered onto
    the complement (order preserved)."""
    H = G
    for pt in fixed:
        H = H.stabilizer(pt)
    keep = [x for x in range(G.degree) if x not in fixed]
    idx = {x: i for i, x in enumerate(keep)}
    gens = []
    for g in H.generators:
        img = [idx[g(x)] for x in keep]
        gens.append(img)
    return gens, PermutationGroup([Permutation(g) for g in gens])

m23_gens, m23 = relabel_stabilizer(m24, [INF])
assert m23.order() == 10200960 and m23.is_transitive()
write_group("m23", 23, m23_gens, 10200960, "M23 = stabilizer of infinity in M24")

m22_gens, m22 = relabel_stabilizer(m24, [INF, 0])
assert m22.order() == 443520 and m22.is_transitive()
write_group("m22", 22, m22_gens, 443520, "M22 = two-point stabilizer of M24")

# ---- M11, M12 --------------------------------------------------------
a11 = list(range(1, 11)) + [0]                      # (1..11) as 0-based 11-cycle
b11 = [0]*11
for i in range(11): b11[i] = i
for c in [(2,6,10,7),(3,9,4,5)]:                    # (3,7,11,8)(4,10,5,6) 1-based
    for i in range(4):
        b11[c[i]] = c[(i+1) % 4]
m11 = PermutationGroup([Permutation(a11), Permutation(b11)])
assert m11.order() == 7920
write_group("m11", 11, (a11, b11), 7920, "M11 natural degree-11 action")

a12 = a11 + [11]
b12 = b11 + [11]
c12 = [0]*12
for pair in [(0,11),(1,10),(2,5),(3,7),(4,8),(6,9)]:  # (1,12)(2,11)(3,6)(4,8)(5,9)(7,10)
    c12[pair[0]], c12[pair[1]] = pair[1], pair[0]
m12 = PermutationGroup([Permutation(g) for g in (a12, b12, c12)])
assert m12.order() == 95040 and m12.is_transitive()
write_group("m12", 12, (a12, b12, c12), 95040, "M12 = <M11, outer involution> on 12 points")

# ---- M11 transitive on 12 points: coset action on an L_2(11) ---------
random.seed(1)
def find_index12_subgroup(G):
    # L_2(11) has order 660; search for two elements generating it.
    elems_by_order = {}
    for _ in range(4000):
        g = G.random()
        elems_by_order.setdefault(g.order(), []).append(g)
    for x in elems_by_order.get(11, []):
        for y in elems_by_order.get(2, [])[:60] + elems_by_order.get(3, [])[:60]:
            H = PermutationGroup([x, y])
            if H.order() == 660:
                return H
    raise RuntimeError("no L_2(11) found")

L = find_index12_subgroup(m11)
cosets = m11.coset_transversal(L)
assert len(cosets) == 12
def coset_index(g):
    for i, t in enumerate(cosets):
        if L.contains(g * t**-1):
            return i
    raise RuntimeError
def coset_action(g):
    return [coset_index(t * g) for t in cosets]
m11d12_gens = [coset_action(Permutation(g, size=11)) for g in (a11, b11)]
m11d12 = PermutationGroup([Permutation(g) for g in m11d12_gens])
assert m11d12.order() == 7920 and m11d12.is_transitive() and m11d12.degree == 12
write_group("m11d12", 12, m11d12_gens, 7920,
            "M11 acting on the cosets of an L_2(11) subgroup (transitive degree 12)")

# ---- M10 inside PGammaL_2(9) ----------------------------------------
# F9 = F3[i], i^2 = -1. Elements a+bi encoded 3a+b. Projective line:
# points [x:1] for x in F9, plus [1:0]; 10 points.
F = [(a, b) for a in range(3) for b in range(3)]
def fmul(u, v):
    (a, b), (c, d) = u, v
    return ((a*c - b*d) % 3, (a*d + b*c) % 3)
def fadd(u, v):
    return ((u[0]+v[0]) % 3, (u[1]+v[1]) % 3)
def fneg(u): return ((-u[0]) % 3, (-u[1]) % 3)
def finv(u):
    for v in F:
        if fmul(u, v) == (1, 0): return v
    raise ZeroDivisionError
ZERO, ONE = (0, 0), (1, 0)
points = [ (x, ONE) for x in F ] + [ (ONE, ZERO) ]   # [x:y]
def normalize(v):
    x, y = v
    if y != ZERO:
        s = finv(y); return (fmul(x, s), ONE)
    return (fmul(x, finv(x)), ZERO)
pindex = {pt: i for i, pt in enumerate(points)}
def proj_of_matrix(M):
    (a, b), (c, d) = M[0], M[1]
    img = []
    for (x, y) in points:
        nx = fadd(fmul(a, x), fmul(b, y))
        ny = fadd(fmul(c, x), fmul(d, y))
        img.append(pindex[normalize((nx, ny))])
    return img
def frob(v): return (v[0], (-v[1]) % 3)   # x -> x^3 = conjugation on F_3[i]
frob_img = []
for (x, y) in points:
    frob_img.append(pindex[normalize((frob(x), frob(y)))])

i9 = (0, 1)                       # a primitive... i has order 4; generator of F9*: 1+i
g9 = (1, 1)
# PSL_2(9) generators: x->x+1 and x->-1/x  => matrices [[1,1],[0,1]], [[0,-1],[1,0]]
t1 = proj_of_matrix(((ONE, ONE), (ZERO, ONE)))
t2 = proj_of_matrix(((ZERO, fneg(ONE)), (ONE, ZERO)))
t3 = proj_of_matrix(((ONE, g9), (ZERO, ONE)))        # x -> x + g, g a generator of F9*
psl = PermutationGroup([Permutation(t1), Permutation(t2), Permutation(t3)])
assert psl.order() == 360
# g with nonsquare determinant: diag(g9, 1); det = g9 = generator (nonsquare)
gmat = proj_of_matrix(((g9, ZERO), (ZERO, ONE)))
# M10 = <PSL, frob o gmat>
fg = [frob_img[gmat[i]] for i in range(10)]   # apply gmat then frobenius
m10 = PermutationGroup([Permutation(t1), Permutation(t2), Permutation(t3), Permutation(fg)])
assert m10.order() == 720, m10.order()
pgl = PermutationGroup([Permutation(t1), Permutation(t2), Permutation(t3), Permutation(gmat)])
assert pgl.order() == 720 and not m10 == pgl
write_group("m10", 10, (t1, t2, t3, fg), 720,
            "M10 = <PSL_2(9), frobenius*diag(g,1)> on the projective line over F_9")

# ---- Sym(5) on 2-sets ------------------------------------------------
pairs = sorted(itertools.combinations(range(5), 2))
pidx = {q: i for i, q in enumerate(pairs)}
def on_pairs(perm5):
    return [pidx[tuple(sorted((perm5[x], perm5[y])))] for (x, y) in pairs]
s5a = [1, 0, 2, 3, 4]
s5b = [1, 2, 3, 4, 0]
g1, g2 = on_pairs(s5a), on_pairs(s5b)
s5p = PermutationGroup([Permutation(g1), Permutation(g2)])
assert s5p.order() == 120 and s5p.is_transitive()
write_group("s5_2sets", 10, (g1, g2), 120, "Sym(5) acting on the ten 2-subsets of {1..5}")

print("all data files written and verified")
