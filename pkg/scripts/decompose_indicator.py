"""Split the indicator of one vertex of J(n,k) into eigenspace components."""
import argparse
from math import comb

from johnson_eigen.formats import format_rational
from johnson_eigen.projection import decompose
from johnson_eigen.subsetspace import parse_subset, rank

parser = argparse.ArgumentParser()
parser.add_argument("--n", type=int, default=4)
parser.add_argument("--k", type=int, default=2)
parser.add_argument("--vertex", default="{1,2}")
args = parser.parse_args()

f = [0] * comb(args.n, args.k)
f[rank(parse_subset(args.vertex, args.n), args.n)] = 1
dec = decompose(f, args.n, args.k)
for d, (comp, energy) in enumerate(zip(dec.components, dec.energies)):
    print(f"f_{d} (energy {format_rational(energy)}):", " ".join(format_rational(x) for x in comp))
