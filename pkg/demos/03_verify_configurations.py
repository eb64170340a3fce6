"""Run the full consistency checklist on stored fixed-point configurations.

The configs/ directory holds three consistent witnesses (the fixed-point
data of the standard circle actions on the projective space, the quadric,
and a semifree two-surface action) and seven contradictions, one for each
branch of the case analysis at rho <= 0.  For a failing configuration the
verifier names the violated identity and reports the exact residual.
"""

import pathlib

from cisym import load_config, verify_case

HERE = pathlib.Path(__file__).parent / "configs"

WITNESSES = ["projective_space", "quadric", "semifree_two_surfaces"]
CONTRADICTIONS = [
    "two_fours",
    "four_plus_surface",
    "four_plus_two_points",
    "cp2like_zero_evaluations",
    "semifree_negative_rho",
    "two_surfaces_negative_rho",
    "surface_two_points_negative_rho",
]


def report(name):
    cfg = load_config(HERE / f"{name}.json")
    result = verify_case(cfg)
    amb = cfg.ambient
    status = "consistent" if result.consistent else "inconsistent"
    print(f"{name} ({cfg.template}, t={amb.t}, rho={amb.rho}): {status}")
    for check in result.checks:
        if check.passed:
            continue
        residual = "" if check.residual is None else f"  residual={check.residual}"
        print(f"    FAIL {check.name}{residual}")
        print(f"         {check.citation}")


print("== witnesses ==")
for name in WITNESSES:
    report(name)

print()
print("== contradictions ==")
for name in CONTRADICTIONS:
    report(name)
