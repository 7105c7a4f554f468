"""Independent oracle for the frozen invariant values in test_invariants.cpp.

Recomputes pointwise invariants for two fixed patches with sympy/mpmath at
50 digits: symbolic differentiation, the same deterministic frame rules
(normals from projected Xuu, Xuv, Xvv then canonical basis vectors, first
nonzero coordinate positive), then K, KN, signed KN, H^2, the defect and the
curvature-action residual norm. Run it to regenerate the constants:

    python3 tests/oracle_frozen.py
"""

import sympy as sp

U, V = sp.symbols("u v")
PREC = 50


def invariants(components, point, signed=False):
    X = sp.Matrix(components)
    Xu, Xv = X.diff(U), X.diff(V)
    Xuu, Xuv, Xvv = Xu.diff(U), Xu.diff(V), Xv.diff(V)

    subs = {U: sp.Rational(point[0]), V: sp.Rational(point[1])}
    num = lambda m: sp.Matrix([sp.N(e.subs(subs), PREC) for e in m])
    x_u, x_v = num(Xu), num(Xv)
    x_uu, x_uv, x_vv = num(Xuu), num(Xuv), num(Xvv)
    n = len(components)

    E, F, G = x_u.dot(x_u), x_u.dot(x_v), x_v.dot(x_v)
    X1 = x_u / sp.sqrt(E)
    x2 = x_v - x_v.dot(X1) * X1
    X2 = x2 / sp.sqrt(x2.dot(x2))
    a1, b1 = 1 / sp.sqrt(E), sp.S(0)
    nu = sp.sqrt(x2.dot(x2))
    a2, b2 = -(F / E) / nu, 1 / nu

    def proj(w):
        return w - w.dot(X1) * X1 - w.dot(X2) * X2

    normals = []
    candidates = [proj(x_uu), proj(x_uv), proj(x_vv)]
    for i in range(n):
        e = sp.zeros(n, 1)
        e[i] = 1
        candidates.append(proj(e))
    for cand in candidates:
        if len(normals) == n - 2:
            break
        r = cand
        for nn in normals:
            r = r - r.dot(nn) * nn
        if sp.sqrt(r.dot(r)) <= sp.Float("1e-10", PREC):
            continue
        r = r / sp.sqrt(r.dot(r))
        for c in r:
            if abs(c) > sp.Float("1e-9", PREC):
                if c < 0:
                    r = -r
                break
        normals.append(r)

    def second(ai, bi, aj, bj):
        return proj(ai * aj * x_uu + (ai * bj + aj * bi) * x_uv + bi * bj * x_vv)

    h11 = second(a1, b1, a1, b1)
    h12 = second(a1, b1, a2, b2)
    h22 = second(a2, b2, a2, b2)

    K = h11.dot(h22) - h12.dot(h12)
    H = (h11 + h22) / 2
    H2 = H.dot(H)
    B = (h11 - h22) / 2
    C = h12
    Bc = [B.dot(nn) for nn in normals]
    Cc = [C.dot(nn) for nn in normals]
    m = len(normals)
    KN = sp.sqrt(
        sum(
            (2 * (Cc[a] * Bc[b] - Bc[a] * Cc[b])) ** 2
            for a in range(m)
            for b in range(a + 1, m)
        )
    )
    defect = H2 - K - KN

    # curvature action (closed forms), norm over the three slots
    c11 = [h11.dot(nn) for nn in normals]
    c12 = [h12.dot(nn) for nn in normals]
    c22 = [h22.dot(nn) for nn in normals]
    s11 = sum(c11[a] * (c22[a] - c11[a]) for a in range(m))
    p11 = sum(c11[a] * c12[a] for a in range(m))
    s12 = sum(c12[a] * (c22[a] - c11[a]) for a in range(m))
    p12 = sum(c12[a] * c12[a] for a in range(m))
    s22 = sum(c22[a] * (c22[a] - c11[a]) for a in range(m))
    p22 = sum(c22[a] * c12[a] for a in range(m))
    diff = h11 - h22
    T11 = (s11 + 2 * K) * h12 + p11 * diff
    T12 = s12 * h12 + (p12 - K) * diff
    T22 = (s22 - 2 * K) * h12 + p22 * diff
    res_norm = sp.sqrt(T11.dot(T11) + 2 * T12.dot(T12) + T22.dot(T22))

    out = {"K": K, "KN": KN, "H2": H2, "defect": defect, "res_norm": res_norm}
    if signed:
        out["KN_signed"] = 2 * (Bc[0] * Cc[1] - Bc[1] * Cc[0])
    return out


def show(name, vals):
    print(f"// {name}")
    for key, val in vals.items():
        print(f"{key:10s} = {sp.N(val, 20)}")
    print()


show(
    "E5 patch (u, v, u*v, u^2 - v^2, sin(u)*cos(v)) at (2/5, -3/10)",
    invariants(
        [U, V, U * V, U**2 - V**2, sp.sin(U) * sp.cos(V)],
        (sp.Rational(2, 5), sp.Rational(-3, 10)),
    ),
)

show(
    "E4 patch (u, v, u*v, cos(u)*sin(v)) at (1/4, 1/2)",
    invariants(
        [U, V, U * V, sp.cos(U) * sp.sin(V)],
        (sp.Rational(1, 4), sp.Rational(1, 2)),
        signed=True,
    ),
)
