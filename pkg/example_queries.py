"""Example queries demonstrating pgroupcount usage."""

from pgroupcount import (
    alpha_order,
    alpha_rs,
    butler_alpha,
    chain_count_indices,
    format_poly,
    identity_rhs,
    parse_padded,
    parse_partition,
    pbinom,
    total_count,
)
from pgroupcount.oracle.census import census_alpha_rs

# ============================================================================
# Example 1: Gaussian binomials
# ============================================================================

print("binom(4, 2)_p =", format_poly(pbinom(4, 2)))
print("  at p = 2:", pbinom(4, 2)(2))

# ============================================================================
# Example 2: Sublattices of Z^s by quotient type
# ============================================================================

lam = parse_padded("2,0")
print(f"sublattices of Z^2 with quotient type ({lam}):", format_poly(alpha_rs(lam)))
print("all sublattices of Z^2 of index p^2:", format_poly(total_count(2, 2)))

# ============================================================================
# Example 3: The brute-force census agrees at a concrete prime
# ============================================================================

census = census_alpha_rs(2, 2, 3)
for padded, count in census.tally.items():
    print(f"  type {padded}: census {count}, formula {alpha_rs(padded)(3)}")

# ============================================================================
# Example 4: Subgroups of a finite abelian p-group
# ============================================================================

group = parse_partition("2,1")
print(f"subgroups of type (1) in ({group}):", format_poly(butler_alpha(group, parse_partition("1"))))
for k in range(group.weight + 1):
    print(f"  order p^{k}:", format_poly(alpha_order(group, k)))

# ============================================================================
# Example 5: The partition sum and chains
# ============================================================================

print("partition sum for n = 4, k = 1:", format_poly(identity_rhs(4, 1)))
print("chains of index p, p^2 in Z^2:", format_poly(chain_count_indices([1, 2], 2)))
