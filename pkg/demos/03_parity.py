# coding: utf-8

# # Parity of operators

# Write e for an even denominator and o for an odd one. An operator is parity
# preserving when every term on both sides has the same parity.

# In[1]:

from collections import Counter

from egyfrac.operators import is_parity_preserving, odd_preserving_check, rewrite_pair, split_basic, split_even
from egyfrac.tables import check_tables, format_report, rewrite_rows


# The basic split always mixes parities; doubling it keeps everything even.

# In[2]:

print(is_parity_preserving(split_basic(3)), is_parity_preserving(split_even(4)))


# For the rewrite, the parity pattern of (d, q, r, s, qr, qs, rs) depends only
# on the parities of d and q. Counting over a grid shows exactly four rows.

# In[3]:

counts = Counter(rewrite_rows())
for row, n in sorted(counts.items()):
    print(" ".join(row), n)


# Only odd q with even d keeps all terms odd:

# In[4]:

print([(q, d) for q in range(2, 6) for d in range(1, 5) if odd_preserving_check(q, d)])
print(rewrite_pair(3, 2))


# All tables at once, compared against the expected rows:

# In[5]:

for report in check_tables():
    print(format_report(report))
