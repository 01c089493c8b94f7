#!/usr/bin/env python3
"""Writes manifests/default.qlm: every identity, expanded over index values."""

import itertools
import pathlib
import sys

ETA = [1, -1, -1, -1]
IDX = range(4)
PAIRS = [(m, n) for m in IDX for n in IDX if m < n]


def eta(m, n):
    return ETA[m] if m == n else 0


def eps_lower(*ix):
    if len(set(ix)) < 4:
        return 0
    perm = list(ix)
    sign = 1
    for i in range(4):
        for j in range(3 - i):
            if perm[j] > perm[j + 1]:
                perm[j], perm[j + 1] = perm[j + 1], perm[j]
                sign = -sign
    return sign


def lin(terms):
    """Sum of (integer coefficient, expression) pairs, zero terms dropped."""
    out = ""
    for c, e in terms:
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        if not out:
            out = ("-" if c < 0 else "") + mag + e
        else:
            out += (" - " if c < 0 else " + ") + mag + e
    return out or "0"


def upper_sum(fn):
    """sum over mu of X^mu Y_mu written with lowered components."""
    return lin([(ETA[m], fn(m)) for m in IDX])


class Manifest:
    def __init__(self):
        self.lines = ["# Identity manifest, generated by tools/gen_manifest.py.",
                      "# name := lhs == rhs @ exact | order N | order (runner's order)", ""]

    def tag(self, t):
        self.lines += ["", f"[{t}]"]

    def add(self, name, lhs, rhs, mode="exact"):
        self.lines.append(f"{name} := {lhs} == {rhs} @ {mode}")

    def text(self):
        return "\n".join(self.lines) + "\n"


def poincare(m):
    m.tag("s2 poincare")
    for a, b in PAIRS:
        m.add(f"PP_{a}{b}", f"comm(P[{a}],P[{b}])", "0")
    for (a, b), r in itertools.product(PAIRS, IDX):
        m.add(f"JP_{a}{b}_{r}", f"comm(J[{a},{b}],P[{r}])",
              lin([(eta(b, r), f"P[{a}]"), (-eta(a, r), f"P[{b}]")]))
    for (a, b), (r, s) in itertools.combinations(PAIRS, 2):
        m.add(f"JJ_{a}{b}_{r}{s}", f"comm(J[{a},{b}],J[{r},{s}])",
              lin([(eta(b, r), f"J[{a},{s}]"), (eta(a, s), f"J[{b},{r}]"),
                   (-eta(a, r), f"J[{b},{s}]"), (-eta(b, s), f"J[{a},{r}]")]))

    m.tag("s2 dilatation")
    for a in IDX:
        m.add(f"DP_{a}", f"comm(D,P[{a}])", f"P[{a}]")
    for a, b in PAIRS:
        m.add(f"DJ_{a}{b}", f"comm(D,J[{a},{b}])", "0")

    m.tag("s2 mass")
    m.add("M2", "M*M", "P2")
    for a in IDX:
        m.add(f"PM_{a}", f"comm(P[{a}],M)", "0")
    for a, b in PAIRS:
        m.add(f"JM_{a}{b}", f"comm(J[{a},{b}],M)", "0")
    m.add("DM", "comm(D,M)", "M")
    m.add("DMabs", "comm(D,Mabs)", "Mabs")

    m.tag("s2 pauli-lubanski")
    for a, r in itertools.product(IDX, IDX):
        m.add(f"PW_{a}{r}", f"comm(P[{a}],W[{r}])", "0")
    for (a, b), r in itertools.product(PAIRS, IDX):
        m.add(f"JW_{a}{b}_{r}", f"comm(J[{a},{b}],W[{r}])",
              lin([(eta(b, r), f"W[{a}]"), (-eta(a, r), f"W[{b}]")]))
    m.add("PW_transverse", upper_sum(lambda a: f"P[{a}]*W[{a}]"), "0")
    m.add("spin_magnitude", "W2*Minv2", "-3/4*hbar^2")

    m.tag("s2 spin tensor")
    for a, b in PAIRS:
        m.add(f"WW_{a}{b}", f"comm(W[{a}],W[{b}])*Minv2", f"S[{a},{b}]")
    for a, b in PAIRS:
        terms = [(eps_lower(a, b, r, s) * ETA[r] * ETA[s], f"W[{r}]*P[{s}]*Minv2")
                 for r in IDX for s in IDX]
        m.add(f"S_epsilon_{a}{b}", f"S[{a},{b}]", lin(terms))
    for b in IDX:
        m.add(f"PS_transverse_{b}",
              lin([(ETA[a], f"P[{a}]*S[{a},{b}]") for a in IDX if a != b]), "0")

    m.tag("s2 positions")
    for a, b in PAIRS:
        m.add(f"J_from_X_{a}{b}", f"J[{a},{b}]",
              f"dot(P[{a}],Xh[{b}]) - dot(P[{b}],Xh[{a}]) + S[{a},{b}]")
        m.add(f"J_from_x_{a}{b}", f"J[{a},{b}]",
              f"dot(P[{a}],xc[{b}]) - dot(P[{b}],xc[{a}]) + sspin[{a},{b}]")
    m.add("D_from_X", "D", upper_sum(lambda a: f"dot(P[{a}],Xh[{a}])"))
    m.add("D_from_x", "D", upper_sum(lambda a: f"dot(P[{a}],xc[{a}])"))
    for a in IDX:
        m.add(f"X_closed_{a}", f"Xh[{a}]",
              f"dot(P[{a}]*Minv2,D) + " + upper_sum(lambda r: f"dot(P[{r}]*Minv2,J[{r},{a}])"))
    for a, b in itertools.product(IDX, IDX):
        m.add(f"PX_{a}{b}", f"comm(P[{a}],Xh[{b}])", str(-eta(a, b)) if eta(a, b) else "0")
    for a in IDX:
        m.add(f"DX_{a}", f"comm(D,Xh[{a}])", f"-Xh[{a}]")
    for (a, b), r in itertools.product(PAIRS, IDX):
        m.add(f"JX_{a}{b}_{r}", f"comm(J[{a},{b}],Xh[{r}])",
              lin([(eta(b, r), f"Xh[{a}]"), (-eta(a, r), f"Xh[{b}]")]))
    for a, b in PAIRS:
        m.add(f"XX_{a}{b}", f"comm(Xh[{a}],Xh[{b}])", f"S[{a},{b}]*Minv2")


def canonical(m):
    m.tag("s3 duality")
    for a, b in PAIRS:
        m.add(f"Sdual_PW_{a}{b}", f"Sdual[{a},{b}]", f"i*(P[{a}]*W[{b}] - P[{b}]*W[{a}])*Minv2")
    for b in IDX:
        m.add(f"PSdual_{b}", lin([(ETA[a], f"P[{a}]*Sdual[{a},{b}]") for a in IDX if a != b]),
              f"i*W[{b}]")
    for a, b in PAIRS:
        # S_{ab} = eta_aa eta_bb (i/2) eps^{ab rs} Sdual_{rs}
        terms = [(-eps_lower(a, b, r, s) * ETA[a] * ETA[b], f"Sdual[{r},{s}]")
                 for r in IDX for s in IDX]
        m.add(f"S_from_dual_{a}{b}", f"S[{a},{b}]", f"1/2*i*({lin(terms)})" if lin(terms) != "0" else "0")
    for a, b in PAIRS:
        m.add(f"s_selfdual_def_{a}{b}", f"sspin[{a},{b}]", f"S[{a},{b}] + gamma5*Sdual[{a},{b}]")
        m.add(f"s_dual_{a}{b}", f"sdual[{a},{b}]", f"gamma5*sspin[{a},{b}]")
    for a in IDX:
        m.add(f"x_from_X_{a}", f"xc[{a}]", f"Xh[{a}] - i*gamma5*W[{a}]*Minv2")
        m.add(f"x_from_X_s_{a}", f"xc[{a}]",
              f"Xh[{a}] - (" + upper_sum(lambda n: f"P[{n}]*sspin[{n},{a}]") + ")*Minv2")

    m.tag("s3 orientation")
    for a in IDX:
        m.add(f"Pgamma5_{a}", f"comm(P[{a}],gamma5)", "0")
    for a, b in PAIRS:
        m.add(f"Jgamma5_{a}{b}", f"comm(J[{a},{b}],gamma5)", "0")
    m.add("Dgamma5", "comm(D,gamma5)", "0")
    m.add("gamma5_square", "gamma5^2", "1")

    m.tag("s3 canonical")
    for a, b in itertools.product(IDX, IDX):
        m.add(f"Px_{a}{b}", f"comm(P[{a}],xc[{b}])", str(-eta(a, b)) if eta(a, b) else "0")
    for a, b in PAIRS:
        m.add(f"xx_{a}{b}", f"comm(xc[{a}],xc[{b}])", "0")
    for (a, b), (r, s) in itertools.combinations(PAIRS, 2):
        m.add(f"ss_{a}{b}_{r}{s}", f"comm(sspin[{a},{b}],sspin[{r},{s}])",
              lin([(eta(b, r), f"sspin[{a},{s}]"), (eta(a, s), f"sspin[{b},{r}]"),
                   (-eta(a, r), f"sspin[{b},{s}]"), (-eta(b, s), f"sspin[{a},{r}]")]))
    for a, (b, r) in itertools.product(IDX, PAIRS):
        m.add(f"Ps_{a}_{b}{r}", f"comm(P[{a}],sspin[{b},{r}])", "0")
        m.add(f"xs_{a}_{b}{r}", f"comm(xc[{a}],sspin[{b},{r}])", "0")
    for a in IDX:
        m.add(f"Dx_{a}", f"comm(D,xc[{a}])", f"-xc[{a}]")
    for (a, b), r in itertools.product(PAIRS, IDX):
        m.add(f"Jx_{a}{b}_{r}", f"comm(J[{a},{b}],xc[{r}])",
              lin([(eta(b, r), f"xc[{a}]"), (-eta(a, r), f"xc[{b}]")]))


def clifford(m):
    m.tag("s4 anticom")
    m.add("eps_square", "eps^2", "1")
    m.add("gamma5_eps", "dot(gamma5,eps)", "0")
    m.add("gamma5_M", "dot(gamma5,M)", "0")
    for a in IDX:
        m.add(f"Peps_{a}", f"comm(P[{a}],eps)", "0")
    for a, b in PAIRS:
        m.add(f"Jeps_{a}{b}", f"comm(J[{a},{b}],eps)", "0")
    m.add("Deps", "comm(D,eps)", "0")
    m.add("M_eps_Mabs", "M", "eps*Mabs")

    m.tag("s4 velocities")
    for a in IDX:
        m.add(f"V_from_X_{a}", f"V[{a}]", f"comm(Xh[{a}],M)")
        m.add(f"gamma_from_x_{a}", f"gamma[{a}]", f"comm(xc[{a}],M)")
        m.add(f"gamma_spin_{a}", f"hbar*gamma[{a}]", f"hbar*V[{a}] - 2*gamma5*Svec[{a}]")
        m.add(f"Svec_gamma5_{a}", f"dot(Svec[{a}],gamma5)", "0")
        m.add(f"spin_vector_{a}", f"Svec[{a}]", f"-1/2*hbar*gamma5*(gamma[{a}] - V[{a}])")
    for a, b in PAIRS:
        m.add(f"s_from_gamma_{a}{b}", f"sspin[{a},{b}]", f"-1/4*hbar^2*comm(gamma[{a}],gamma[{b}])")
    for a, b in PAIRS:
        m.add(f"VV_{a}{b}", f"comm(V[{a}],V[{b}])", "0")

    m.tag("s4 dirac")
    m.add("Dirac_left", "M", upper_sum(lambda a: f"P[{a}]*gamma[{a}]"))
    m.add("Dirac_right", "M", upper_sum(lambda a: f"gamma[{a}]*P[{a}]"))
    for a, b in itertools.combinations_with_replacement(IDX, 2):
        m.add(f"Clifford_{a}{b}", f"dot(gamma[{a}],gamma[{b}])", str(eta(a, b)))
    for a, b in itertools.product(IDX, IDX):
        m.add(f"Pgamma_{a}{b}", f"comm(P[{a}],gamma[{b}])", "0")
        m.add(f"xgamma_{a}{b}", f"comm(xc[{a}],gamma[{b}])", "0")
    for a in IDX:
        m.add(f"gamma5_gamma_{a}", f"dot(gamma5,gamma[{a}])", "0")
    m.add("gamma5_product", "gamma5", "i*gamma[0]*gamma[1]*gamma[2]*gamma[3]")

    m.tag("s4 spin one half")
    for a, b in itertools.combinations_with_replacement(IDX, 2):
        rhs = f"-1/4*hbar^2*({eta(a, b)} - P[{a}]*P[{b}]*Minv2)" if eta(a, b) else \
              f"1/4*hbar^2*P[{a}]*P[{b}]*Minv2"
        m.add(f"SS_{a}{b}", f"dot(Svec[{a}],Svec[{b}])", rhs)
    m.add("Svec_magnitude", upper_sum(lambda a: f"Svec[{a}]*Svec[{a}]"), "-3/4*hbar^2")


def conformal(m):
    m.tag("s5 conformal")
    for a, b in itertools.product(IDX, IDX):
        m.add(f"PC_{a}{b}", f"comm(P[{a}],C[{b}])",
              lin([(-2 * eta(a, b), "D"), (-2 if a != b else 0, f"J[{a},{b}]")]))
    for (a, b), r in itertools.product(PAIRS, IDX):
        m.add(f"JC_{a}{b}_{r}", f"comm(J[{a},{b}],C[{r}])",
              lin([(eta(b, r), f"C[{a}]"), (-eta(a, r), f"C[{b}]")]))
    for a in IDX:
        m.add(f"DC_{a}", f"comm(D,C[{a}])", f"-C[{a}]")
    for a, b in PAIRS:
        m.add(f"CC_{a}{b}", f"comm(C[{a}],C[{b}])", "0")


def written_vierbein(mu, nu, v):
    """e_mu^nu in covariant written form, products as written."""
    vsq = upper_sum(lambda a: f"{v}[{a}]*{v}[{a}]")
    adv = "alphax" if v == "xc" else "alphaX"
    up = f"(-{v}[{nu}])" if ETA[nu] < 0 else f"{v}[{nu}]"
    terms = []
    if mu == nu:
        terms.append(f"(1 - 2*{adv} + alpha2*({vsq}))")
    terms.append(f"-2*alphal[{mu}]*{up}")
    terms.append(f"2*{v}[{mu}]*alpha[{nu}]")
    terms.append(f"4*alphal[{mu}]*{adv}*{up}")
    terms.append(f"-2*alpha2*{v}[{mu}]*{up}")
    terms.append(f"-2*alphal[{mu}]*alpha[{nu}]*({vsq})")
    out = terms[0]
    for t in terms[1:]:
        out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
    return out


def frames(m):
    m.tag("s5 frames")
    m.add("sign_convention", "alphapart(conj(M; order=1), 1)", "-2*dot(M, alphax)")
    m.add("mass_law", "conj(M; order=2)", "dot(M, lambdainv)")
    m.add("mass_law_config_order", "conj(M)", "dot(M, lambdainv)", "order")
    m.add("mass_terminates", "adn(M, 3)", "0")
    m.add("mass_inverse_law", "conjinv(M; order=2)", "dot(M, 1 + 2*alphax + alpha2*x2)")
    xbar = [f"conj(xc[{a}])" for a in IDX]
    lam_bar = "1 + 2*(" + lin([(1, f"alpha[{a}]*{xbar[a]}") for a in IDX]) + ") + alpha2*(" + \
        upper_sum(lambda a: f"{xbar[a]}^2") + ")"
    m.add("mass_reciprocal_form", f"dot(conj(M), {lam_bar})", "M", "order")
    for a in IDX:
        m.add(f"position_law_{a}", f"lambdainv*conj(xc[{a}])", f"xc[{a}] - x2*alphal[{a}]", "order")
    for a in IDX:
        m.add(f"momentum_terminates_{a}", f"adn(P[{a}], 3)", "0")
    for a, b in itertools.product(IDX, IDX):
        m.add(f"vierbein_def_{a}{b}", f"vierbein[{a},{b}]", f"lambdainv^2*dx(conj(xc[{a}]), {b})", "order")
        m.add(f"vierbein_quadratic_{a}{b}", f"alphapart(vierbein[{a},{b}], 3)", "0")
        m.add(f"vierbein_closed_{a}{b}", f"vierbein[{a},{b}]", written_vierbein(a, b, "xc"))
    for a, b in itertools.combinations_with_replacement(IDX, 2):
        g = upper_sum(lambda r: f"dxl(conj(xc[{r}]), {a})*dxl(conj(xc[{r}]), {b})")
        rhs = f"{eta(a, b)}*lambda^2" if eta(a, b) else "0"
        m.add(f"metric_{a}{b}", g, rhs, "order")
    for a in IDX:
        m.add(f"tetrad_{a}", f"conj(gamma[{a}])",
              "lambda*(" + lin([(1, f"vierbein[{a},{n}]*gamma[{n}]") for n in IDX]) + ")", "order")
    for a, b in itertools.combinations_with_replacement(IDX, 2):
        m.add(f"clifford_preserved_{a}{b}", f"dot(conj(gamma[{a}]), conj(gamma[{b}]))",
              str(eta(a, b)), "order")
    for a in IDX:
        main = lin([(1, f"dot(vierbein[{a},{n}], P[{n}])") for n in IDX])
        spin = lin([(1, f"dx(vierbein[{a},{n}], {r})*sspin[{n},{r}]") for n in IDX for r in IDX])
        m.add(f"momentum_law_{a}", f"conj(P[{a}])", f"{main} + 1/2*({spin})", "order")
    for a, b in itertools.product(IDX, IDX):
        m.add(f"canonical_invariance_{a}{b}", f"comm(conj(P[{a}]), conj(xc[{b}]))",
              str(-eta(a, b)) if eta(a, b) else "0", "order")
    rec = ["M"] + [f"{n}[{a}]" for n in ("xc", "P", "gamma") for a in IDX]
    for e in rec:
        m.add(f"reciprocity_{e.replace('[', '').replace(']', '')}", f"conjinv(conj({e}))", e, "order")
    m.add("homomorphism_Mx", "conj(M*xc[0])", "conj(M)*conj(xc[0])", "order")
    m.add("homomorphism_JP", "conj(J[0,1]*P[2])", "conj(J[0,1])*conj(P[2])", "order")
    m.add("homomorphism_gx", "conj(gamma[1]*xc[1])", "conj(gamma[1])*conj(xc[1])", "order")

    m.tag("s5 hermitian")
    mbar = "conj(M; order=2)"
    factor = "1 - 2*alphaX + alpha2*X2"
    m.add("hermitian_mass_coefficient", f"coeff({mbar} - dot(M, {factor}), dot(M, alpha2)*Minv2)",
          "3/4*hbar^2")
    m.add("hermitian_mass_law", mbar, "dot(M, 1 - 2*alphaX + alpha2*(X2 + 3/4*hbar^2*Minv2))")
    for a in IDX:
        main = lin([(1, f"dot(subX(vierbein[{a},{n}]), P[{n}])") for n in IDX])
        spin = lin([(1, f"dot(subX(dx(vierbein[{a},{n}], {r})), S[{n},{r}])")
                    for n in IDX for r in IDX])
        dd = lin([(1, f"dot(subX(dxl(dx(vierbein[{a},{n}], {r}), {n})), P[{r}]*Minv2)")
                  for n in IDX for r in IDX])
        pbar = f"conj(P[{a}]; order=2)"
        if a == 0:
            m.add("hermitian_momentum_coefficient",
                  f"coeff({pbar} - ({main}) - 1/2*({spin}), {dd})", "3/32*hbar^2")
        m.add(f"hermitian_momentum_law_{a}", pbar,
              f"{main} + 1/2*({spin}) + 3/32*hbar^2*({dd})")
    for a in IDX:
        sym = lin([(1, f"dot(subX(vierbein[{a},{n}]), P[{n}])") for n in IDX])
        written = " + ".join(f"dot({written_vierbein(a, n, 'Xh')}, P[{n}])" for n in IDX)
        m.add(f"ordering_written_{a}", written, sym)
        rev = " + ".join(f"dot({written_vierbein_reversed(a, n)}, P[{n}])" for n in IDX)
        m.add(f"ordering_reversed_{a}", rev, sym)


def written_vierbein_reversed(mu, nu):
    """Same form with the two-position products in the opposite order."""
    vsq = upper_sum(lambda a: f"Xh[{a}]*Xh[{a}]")
    up = f"(-Xh[{nu}])" if ETA[nu] < 0 else f"Xh[{nu}]"
    terms = []
    if mu == nu:
        terms.append(f"(1 - 2*alphaX + alpha2*({vsq}))")
    terms.append(f"-2*alphal[{mu}]*{up}")
    terms.append(f"2*Xh[{mu}]*alpha[{nu}]")
    terms.append(f"4*alphal[{mu}]*{up}*alphaX")
    terms.append(f"-2*alpha2*{up}*Xh[{mu}]")
    terms.append(f"-2*alphal[{mu}]*alpha[{nu}]*({vsq})")
    out = terms[0]
    for t in terms[1:]:
        out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
    return out


def adjoint(m):
    m.tag("adjoint")
    m.add("adj_i", "adj(i)", "-i")
    m.add("adj_M", "adj(M)", "M")
    m.add("adj_D", "adj(D)", "D")
    m.add("adj_gamma5", "adj(gamma5)", "gamma5")
    m.add("adj_eps", "adj(eps)", "eps")
    for a in IDX:
        m.add(f"adj_P_{a}", f"adj(P[{a}])", f"P[{a}]")
        m.add(f"adj_X_{a}", f"adj(Xh[{a}])", f"Xh[{a}]")
        m.add(f"adj_C_{a}", f"adj(C[{a}])", f"C[{a}]")
        m.add(f"adj_shift_{a}", f"adj(xc[{a}] - Xh[{a}])", f"-(xc[{a}] - Xh[{a}])")
    for a, b in PAIRS:
        m.add(f"adj_J_{a}{b}", f"adj(J[{a},{b}])", f"J[{a},{b}]")
        m.add(f"adj_S_{a}{b}", f"adj(S[{a},{b}])", f"S[{a},{b}]")


def main():
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else \
        pathlib.Path(__file__).resolve().parent.parent / "manifests" / "default.qlm"
    m = Manifest()
    poincare(m)
    canonical(m)
    clifford(m)
    conformal(m)
    frames(m)
    adjoint(m)
    out.write_text(m.text())
    print(f"{out}: {sum(1 for l in m.lines if not l.startswith('#') and ':=' in l)} entries")


if __name__ == "__main__":
    main()
