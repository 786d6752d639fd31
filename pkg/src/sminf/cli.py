"""Command line surface.

Every command reads JSON matrix documents, runs one library operation,
and prints a deterministic JSON report to stdout (fixed key order, no
timestamps; identical inputs give byte-identical bytes).  Reports embed
the sha256 of each input's canonical form.  Results carrying their own
exactness obligations (factorizations, completions, realizations, bases,
coprimeness witnesses) are re-verified before exit; a failed check exits
with code 3.  Exit codes: 0 success, 1 parse error, 2 precondition
violation, 3 failed internal verification.

Setting the environment variable SMINF_SELFTEST_CORRUPT to a nonempty
value deliberately corrupts computed artifacts before re-verification;
the test suite uses it to exercise the exit-3 contract.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import (
    ParseError,
    PreconditionError,
    SminfError,
    FieldMismatchError,
)
from .field_matrix import FieldMatrix
from .fields import field_from_flag
from .hom import (
    Intertwiner,
    alt_condition_check,
    check_intertwining,
    complete_intertwiner,
    dual_intertwiner,
    exists_injective,
    exists_surjective,
    hom_matrix,
    left_coprime,
)
from .infinity import minor_valuation_profile, smith_at_infinity
from .matrices import PolyMatrix, RatMatrix
from .poly import Poly
from .ratfun import RatFun
from .realization import canonical_split, realize_plus, verify_markov
from .residue_module import canonical_rep, canonical_rep_rational, compute_basis, gram_matrix
from .serialize import (
    canonical_hash,
    dumps_doc,
    field_matrix_to_doc,
    matrix_to_doc,
    parse_matrix,
    poly_matrix_to_doc,
)
from . import corpus


def _corrupt_enabled() -> bool:
    return bool(os.environ.get("SMINF_SELFTEST_CORRUPT"))


def _corrupt_rat(M: RatMatrix) -> RatMatrix:
    if not _corrupt_enabled() or M.rows == 0 or M.cols == 0:
        return M
    grid = [list(row) for row in M.entries]
    grid[0][0] = grid[0][0] + RatFun.one(M.field)
    return RatMatrix(M.field, grid, cols=M.cols)

def _corrupt_field_matrix(M: FieldMatrix) -> FieldMatrix:
    if not _corrupt_enabled() or M.rows == 0 or M.cols == 0:
        return M
    grid = [list(row) for row in M.entries]
    grid[0][0] = M.field.add(grid[0][0], M.field.one)
    return FieldMatrix(M.field, grid, cols=M.cols)


class _Inputs:
    """Loads input files, enforcing one shared field and recording hashes."""

    def __init__(self, field_flag: str | None):
        self.expected = field_from_flag(field_flag) if field_flag else None
        self.hashes = {}

    def rational(self, path: str, role: str) -> RatMatrix:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {role} from {path}: {exc}") from None
        M = parse_matrix(data)
        if self.expected is not None and M.field != self.expected:
            raise FieldMismatchError(
                f"{role} is over {M.field!r}, --field asked for {self.expected!r}"
            )
        if self.expected is None:
            self.expected = M.field
        self.hashes[role] = canonical_hash(M)
        return M

    def host(self, path: str, role: str) -> PolyMatrix:
        M = self.rational(path, role)
        if not M.is_polynomial:
            raise PreconditionError(f"{role} must be a polynomial matrix")
        if not M.is_square:
            raise PreconditionError(f"{role} must be square")
        return M.to_poly()


def _profile_fields(profile):
    return {
        "alphas": list(profile.alphas),
        "betas": list(profile.betas),
        "rank": profile.rank,
    }


def _cmd_structure(args, inputs: _Inputs):
    from .errors import SingularMatrixError

    L = inputs.host(args.L, "L")
    F = L.field
    if L.to_rat().det().is_zero:
        raise SingularMatrixError("L is singular")
    scaled = L.to_rat().scale(RatFun.monomial(F, -1))
    profile = smith_at_infinity(scaled).profile
    alphas = list(profile.alphas)
    if _corrupt_enabled():
        alphas = alphas + [1]
    oracle = minor_valuation_profile(scaled)
    verified = (
        tuple(alphas) == oracle.alphas
        and profile.betas == oracle.betas
        and profile.rank == oracle.rank
    )
    return {
        "command": "structure",
        "field": F.tag(),
        "inputs": inputs.hashes,
        "alphas": alphas,
        "betas": list(profile.betas),
        "rank": profile.rank,
        "dim": sum(alphas),
        "verified": verified,
    }


def _cmd_smith_inf(args, inputs: _Inputs):
    W = inputs.rational(args.W, "W")
    fact = smith_at_infinity(W)
    left = _corrupt_rat(fact.left)
    verified = (
        left * fact.sigma * fact.right == W
        and left.is_bicausal()
        and fact.right.is_bicausal()
    )
    doc = {
        "command": "smith-inf",
        "field": W.field.tag(),
        "inputs": inputs.hashes,
        "profile": _profile_fields(fact.profile),
        "P": matrix_to_doc(left),
        "Sigma": matrix_to_doc(fact.sigma),
        "Q": matrix_to_doc(fact.right),
        "verified": verified,
    }
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for name, M in (("P", left), ("Sigma", fact.sigma), ("Q", fact.right)):
            with open(os.path.join(args.out, f"{name}.json"), "w") as fh:
                fh.write(dumps_doc(matrix_to_doc(M)))
    return doc


def _cmd_basis(args, inputs: _Inputs):
    L = inputs.host(args.L, "L")
    basis = compute_basis(L)
    basis_t = compute_basis(L.transpose())
    gram = gram_matrix(L, basis_t, basis)
    reps = [_corrupt_rat(e.rep.to_rat()) for e in basis.elements]
    verified = all(
        canonical_rep(L, x) == canonical_rep_rational(L, rep)
        and canonical_rep(L, x).rep.to_rat() == rep
        for rep, x in zip(reps, basis.preimages)
    ) and (basis.dim == 0 or gram.is_invertible())
    return {
        "command": "basis",
        "field": L.field.tag(),
        "inputs": inputs.hashes,
        "dim": basis.dim,
        "bound": basis.bound,
        "reps": [matrix_to_doc(rep) for rep in reps],
        "preimages": [matrix_to_doc(x) for x in basis.preimages],
        "shift": field_matrix_to_doc(basis.shift),
        "gram": field_matrix_to_doc(gram),
        "verified": verified,
    }


def _cmd_rho(args, inputs: _Inputs):
    L = inputs.host(args.L, "L")
    x = inputs.rational(args.x, "x")
    u = canonical_rep(L, x)
    rep = _corrupt_rat(u.rep.to_rat())
    verified = canonical_rep_rational(L, rep).rep.to_rat() == rep
    return {
        "command": "rho",
        "field": L.field.tag(),
        "inputs": inputs.hashes,
        "rep": matrix_to_doc(rep),
        "kernel_member": u.is_zero,
        "verified": verified,
    }


def _load_hom_data(args, inputs: _Inputs):
    L = inputs.host(args.L, "L")
    L1 = inputs.host(args.L1, "L1")
    theta = inputs.rational(args.Theta, "Theta")
    theta1 = None
    if args.Theta1:
        theta1 = inputs.rational(args.Theta1, "Theta1")
    return L, L1, theta, theta1


def _derive_theta1(L, L1, theta) -> RatMatrix:
    theta1 = L1.to_rat().inverse() * theta * L.to_rat()
    if not theta1.is_proper:
        raise PreconditionError(
            "derived counterpart L1^-1 * Theta * L is improper; pass Theta1 explicitly"
        )
    return theta1


def _build_intertwiner(L, L1, theta, theta1) -> Intertwiner:
    if theta1 is None:
        theta1 = _derive_theta1(L, L1, theta)
    if not check_intertwining(theta, theta1, L, L1):
        raise PreconditionError("pair does not satisfy Theta * L = L1 * Theta1")
    return Intertwiner(L=L, L1=L1, theta=theta, theta1=theta1)


def _cmd_hom(args, inputs: _Inputs):
    L, L1, theta, theta1 = _load_hom_data(args, inputs)
    F = L.field
    base = {"command": f"hom {args.action}", "field": F.tag(), "inputs": inputs.hashes}

    if args.action == "check":
        if theta1 is None:
            raise PreconditionError("hom check needs an explicit Theta1")
        base["intertwining"] = check_intertwining(theta, theta1, L, L1)
        base["alt_condition"] = alt_condition_check(theta, theta1, L, L1)
        return base

    if args.action == "complete":
        result = complete_intertwiner(theta, L, L1)
        psi = _corrupt_rat(result.psi)
        adjusted = theta + L1 * psi
        verified = (
            psi.is_strictly_proper
            and (L1 * psi).is_proper
            and result.theta1.is_proper
            and adjusted * L == L1 * result.theta1
        )
        base.update(
            Psi=matrix_to_doc(psi),
            Theta1=matrix_to_doc(result.theta1),
            ThetaAdjusted=matrix_to_doc(adjusted),
            verified=verified,
        )
        return base

    iw = _build_intertwiner(L, L1, theta, theta1)

    if args.action == "build":
        basis_l = compute_basis(L)
        basis_l1 = compute_basis(L1)
        H = _corrupt_field_matrix(hom_matrix(iw, basis_l, basis_l1))
        verified = H * basis_l.shift == basis_l1.shift * H
        base.update(
            source_dim=basis_l.dim,
            target_dim=basis_l1.dim,
            hom_matrix=field_matrix_to_doc(H),
            verified=verified,
        )
        return base

    if args.action == "dual":
        dual = dual_intertwiner(iw)
        theta_d = _corrupt_rat(dual.theta)
        verified = theta_d * dual.L == dual.L1 * dual.theta1
        base.update(
            L=poly_matrix_to_doc(dual.L),
            L1=poly_matrix_to_doc(dual.L1),
            Theta=matrix_to_doc(theta_d),
            Theta1=matrix_to_doc(dual.theta1),
            verified=verified,
        )
        return base

    if args.action in ("surjective", "injective"):
        if args.action == "surjective":
            X = iw.theta
            Y = iw.L1.to_rat().scale(RatFun.monomial(F, -1))
        else:
            X = iw.theta1.transpose()
            Y = iw.L.transpose().to_rat().scale(RatFun.monomial(F, -1))
        cert = left_coprime(X, Y)
        base[args.action] = cert.verdict
        if cert.verdict:
            C = _corrupt_rat(cert.C)
            base["witness_C"] = matrix_to_doc(C)
            base["witness_D"] = matrix_to_doc(cert.D)
            base["verified"] = (
                C.is_proper
                and cert.D.is_proper
                and X * C + Y * cert.D == RatMatrix.identity(F, X.rows)
            )
        else:
            base["reason"] = cert.reason
        return base

    raise PreconditionError(f"unknown hom action {args.action!r}")


def _cmd_exists_hom(args, inputs: _Inputs):
    L = inputs.host(args.L, "L")
    L1 = inputs.host(args.L1, "L1")
    from .infinity import infinite_elementary_divisors

    exists = exists_surjective(L, L1) if args.direction == "surj" else exists_injective(L, L1)
    return {
        "command": "exists-hom",
        "field": L.field.tag(),
        "inputs": inputs.hashes,
        "direction": args.direction,
        "source_exponents": infinite_elementary_divisors(L),
        "target_exponents": infinite_elementary_divisors(L1),
        "exists": exists,
    }


def _cmd_realize(args, inputs: _Inputs):
    G = inputs.rational(args.G, "G")
    split = canonical_split(G)
    rlz = realize_plus(split)
    c2 = _corrupt_field_matrix(rlz.c2)
    tampered = type(rlz)(basis=rlz.basis, n2=rlz.n2, b2=rlz.b2, c2=c2)
    verified = split.reconstruct() == G and verify_markov(split, tampered)
    return {
        "command": "realize",
        "field": G.field.tag(),
        "inputs": inputs.hashes,
        "dim": rlz.basis.dim,
        "N2": field_matrix_to_doc(rlz.n2),
        "B2": field_matrix_to_doc(rlz.b2),
        "C2": field_matrix_to_doc(c2),
        "basis_reps": [matrix_to_doc(e.rep.to_rat()) for e in rlz.basis.elements],
        "W2": matrix_to_doc(split.w2),
        "P2": matrix_to_doc(split.p2),
        "D2": poly_matrix_to_doc(split.d2),
        "Q2": matrix_to_doc(split.q2),
        "markov_verified": verified,
    }


def _cmd_gen(args, inputs: _Inputs):
    import random

    field = inputs.expected or field_from_flag(args.field or "Q")
    rng = random.Random(args.seed)
    if args.kind == "matrix":
        if args.nonsingular:
            M = corpus.random_nonsingular(rng, field, args.n, args.degree).to_rat()
        else:
            M = corpus.random_poly_matrix(
                rng, field, args.rows or args.n, args.cols or args.n, args.degree
            ).to_rat()
        return matrix_to_doc(M)
    if args.kind == "pencil":
        host, swapped = corpus.random_pencil(rng, field, args.n)
        return {
            "command": "gen pencil",
            "field": field.tag(),
            "host": poly_matrix_to_doc(host),
            "swapped": poly_matrix_to_doc(swapped),
        }
    if args.kind == "transfer":
        return matrix_to_doc(
            corpus.random_rat_matrix(rng, field, args.rows or 2, args.cols or 2, args.degree)
        )
    if args.kind == "intertwiner":
        iw = corpus.random_intertwiner(rng, field)
        parts = {
            "L": poly_matrix_to_doc(iw.L),
            "L1": poly_matrix_to_doc(iw.L1),
            "Theta": matrix_to_doc(iw.theta),
            "Theta1": matrix_to_doc(iw.theta1),
        }
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            for name, doc in parts.items():
                with open(os.path.join(args.out, f"{name}.json"), "w") as fh:
                    fh.write(dumps_doc(doc))
        return {"command": "gen intertwiner", "field": field.tag(), **parts}
    raise PreconditionError(f"unknown gen kind {args.kind!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sminf",
        description="Exact structure at infinity of polynomial matrices.",
    )
    parser.add_argument("--field", help="expected field: Q or GF:<p>", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("structure", help="invariant exponents and module dimension")
    p.add_argument("L")

    p = sub.add_parser("smith-inf", help="factor W = P * Sigma * Q over the proper ring")
    p.add_argument("W")
    p.add_argument("--out", help="directory for P.json / Sigma.json / Q.json")

    p = sub.add_parser("basis", help="module basis, shift matrix, Gram matrix")
    p.add_argument("L")

    p = sub.add_parser("rho", help="canonical representative of a proper column")
    p.add_argument("L")
    p.add_argument("x")

    p = sub.add_parser("hom", help="homomorphism operations")
    p.add_argument("action", choices=["check", "build", "complete", "dual", "surjective", "injective"])
    p.add_argument("L")
    p.add_argument("L1")
    p.add_argument("Theta")
    p.add_argument("Theta1", nargs="?", default=None)

    p = sub.add_parser("exists-hom", help="existence of surjective/injective maps")
    p.add_argument("L")
    p.add_argument("L1")
    p.add_argument("--direction", choices=["surj", "inj"], required=True)

    p = sub.add_parser("realize", help="realize the polynomial part of a transfer matrix")
    p.add_argument("G")

    p = sub.add_parser("gen", help="seeded corpus generation")
    p.add_argument("kind", choices=["matrix", "pencil", "transfer", "intertwiner"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--nonsingular", action="store_true")
    p.add_argument("--out", help="directory for generated files")

    return parser


_HANDLERS = {
    "structure": _cmd_structure,
    "smith-inf": _cmd_smith_inf,
    "basis": _cmd_basis,
    "rho": _cmd_rho,
    "hom": _cmd_hom,
    "exists-hom": _cmd_exists_hom,
    "realize": _cmd_realize,
    "gen": _cmd_gen,
}


def _verification_failed(doc) -> bool:
    return any(
        key.endswith("verified") and value is False for key, value in doc.items()
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = _Inputs(args.field)
    try:
        doc = _HANDLERS[args.command](args, inputs)
    except SminfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(dumps_doc(doc))
    if _verification_failed(doc):
        print("error: internal verification failed", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
