"""Print the J(4,2) basis: eigenvalue, top set, squared norm and entries."""
from johnson_eigen import engine
from johnson_eigen.projection import norm_squared
from johnson_eigen.subsetspace import enumerate_subsets, format_subset
from johnson_eigen.topsets import format_top_set

n, k = 4, 2
print("vertices:", " ".join(format_subset(s) for s in enumerate_subsets(n, k)))
for e in engine.run_basis(engine.RunConfig(n, k)):
    entries = " ".join(f"{int(x):3d}" for x in e.entries)
    print(f"d={e.d} lambda={e.eigenvalue:3d} B={format_top_set(e.top):7s} |e|^2={norm_squared(e.top, n, k)!s:3s}  {entries}")
