# coding: utf-8

# # Exhaustive search as a cross-check

# The search module knows nothing about the constructions. It lists every
# representation within explicit bounds, which makes it a good referee.

# In[1]:

from fractions import Fraction

from egyfrac.operators import split_odd3
from egyfrac.search import SearchConstraints, enumerate_reprs, search_all_odd, two_term_odd_split_exists, verify_repr


# 1/2 + 1/3 + 1/6 is the only way to write 1 with three denominators up to 6.

# In[2]:

for x in enumerate_reprs(1, SearchConstraints(max_terms=3, max_denominator=6)):
    print(x)


# All two-term representations of 1/6:

# In[3]:

for x in enumerate_reprs(Fraction(1, 6), SearchConstraints(2, 42)):
    print(x)


# With odd denominators only, 1/3 needs three terms. The odd three-way split
# finds the same triple the search does.

# In[4]:

for x in search_all_odd(Fraction(1, 3), SearchConstraints(3, 45, "all_odd")):
    print(x)
print(split_odd3(3))
print(any(two_term_odd_split_exists(n) for n in range(3, 1000, 2)))


# A nine-term expansion of 1 with odd denominators, checked exactly:

# In[5]:

print(verify_repr([3, 5, 7, 9, 11, 15, 35, 45, 231], 1))
