"""Which chaotic map should drive which parameter?

Sweeps every (variant, map) pair over the three design problems and ranks
variants by mean absolute error against the published best costs.  Small
budgets here; scale replicates/iterations up for a real study (or use the
``cscf run`` / ``cscf report`` commands to persist everything).
"""

from cscf.chaos import MAP_NAMES
from cscf.engineering import engineering_suite
from cscf.hybrid import OptimizerConfig, variant_sweep

VARIANTS = ("i", "ii", "iii", "iv", "v")

result = variant_sweep(
    engineering_suite(),
    variants=VARIANTS,
    map_names=MAP_NAMES,
    replicates=2,
    config=OptimizerConfig(population=12, max_iter=80),
    base_seed=0,
)

print(f"{len(result.cells)} cells "
      f"({len(engineering_suite())} problems x {len(VARIANTS)} variants x "
      f"{len(MAP_NAMES)} maps)\n")

grid = result.grid()
for problem in ("welded_beam", "pressure_vessel", "spring"):
    print(problem)
    print(f"  {'map':14s}" + "".join(f"{v:>10s}" for v in VARIANTS))
    for map_name in MAP_NAMES:
        row = grid[(problem, map_name)]
        print(f"  {map_name:14s}" + "".join(f"{row[v]:10.4g}" for v in VARIANTS))
    print()

print("variant ranking by mean MAE across all cells:")
for variant, rank in sorted(result.variant_rank.items(), key=lambda kv: kv[1]):
    print(f"  rank {rank}: variant {variant}  "
          f"(mean MAE {result.variant_mean_mae[variant]:.4g})")
