# coding: utf-8

# # Splitting, rewriting and merging

# An operator swaps some terms of a representation for others with the same
# exact sum. Each one is built as an `OperatorInstance`, which refuses to exist
# if its two sides differ.

# In[1]:

from egyfrac import EgyptianRepr
from egyfrac.operators import (
    apply_to_repr,
    merge_pair,
    rewrite_match,
    rewrite_pair,
    split_basic,
    split_even,
    split_odd3,
    split_product,
)


# ## Splitters
#
# (n) = (n+1, n(n+1)) turns one term into two.

# In[2]:

print(split_basic(3))
print(split_even(6))
print(split_odd3(5))
print(split_product([2, 3, 4, 5, 6]))


# Applied to 1 = 1/2 + 1/3 + 1/6, splitting 1/3 gives a second expansion of 1.

# In[3]:

one = EgyptianRepr((2, 3, 6))
print(apply_to_repr(one, split_basic(3)))


# Splitting 1/2 would produce 1/3 and 1/6 again. The strict policy refuses;
# resplit keeps splitting the clashing terms until they are all new.

# In[4]:

print(apply_to_repr(one, split_basic(2), policy="resplit"))


# ## The two-for-two rewrite
#
# With r = q + d and s = qr - d: 1/(qr) + 1/(qs) = 1/s + 1/(rs).

# In[5]:

for q, d in [(2, 1), (3, 2), (3, 4)]:
    print(rewrite_pair(q, d))


# Going back from a pair of denominators to (q, d):

# In[6]:

for pair in [(6, 10), (5, 15), (7, 11)]:
    print(pair, rewrite_match(*pair))


# ## Merging
#
# Two unit fractions merge when xy/(x+y) is an integer.

# In[7]:

print(merge_pair(4, 12), merge_pair(10, 15), merge_pair(3, 5))
