"""Bounded exhaustive searches over fixed-point configurations.

Two experiments:

1. Sweep all seven templates over t in [1, 10] and rho in [-10, 0] with
   the standard restriction flags.  The hit list is empty: within these
   bounds no fixed-point configuration survives every localization check,
   which is the mechanized core of the non-existence argument for
   non-positive rho.

2. Relax to rho in [-10, 10] for the semifree two-surface template.  Now
   solutions appear, exactly at rho in {1, 4}, and they all satisfy the
   closure identity rho * (a_X - a_Y)^2 = 4.
"""

import time

from cisym import SearchBounds, SearchFlags, TEMPLATES, search_case

bounds = SearchBounds(max_weight=5, max_abs_a=5, max_abs_eval=10)

print("== rho <= 0: every template comes up empty ==")
start = time.monotonic()
for template in sorted(TEMPLATES):
    hits = search_case(template, t_range=(1, 10), rho_range=(-10, 0),
                       bounds=bounds)
    print(f"  {template:28s} hits: {len(hits)}")
print(f"  ({time.monotonic() - start:.1f}s)")

print()
print("== semifree two-surface actions at any rho in [-10, 10] ==")
hits = search_case("two_surfaces", t_range=(1, 10), rho_range=(-10, 10),
                   bounds=bounds, flags=SearchFlags(semifree=True))
print(f"  {len(hits)} solutions")
for cfg in hits:
    sx, sy = cfg.surfaces()
    closure = cfg.ambient.rho * (sx.a - sy.a) ** 2
    print(f"  t={cfg.ambient.t:2d}  rho={cfg.ambient.rho}  a_X={sx.a:+d}"
          f"  ev_x={sx.ev_x}  ev_y1={sx.ev_y1:+d}"
          f"  closure rho*(a_X-a_Y)^2={closure}")
