# coding: utf-8

# # Writing rationals as sums of distinct unit fractions

# Every positive rational is a finite sum of distinct unit fractions 1/n. This
# walk-through shows the two constructions in `egyfrac.expansion`: the greedy
# expansion of a proper fraction and the full expansion of any positive value.

# In[1]:

from fractions import Fraction

from egyfrac import expand_full, expand_one_from, greedy_expand
from egyfrac.expansion import ExpansionTooLarge


# ## Greedy expansion
#
# Take the largest unit fraction that fits, subtract, repeat. The trace keeps
# every (a, b, u) step so the recurrence can be checked by hand.

# In[2]:

trace = greedy_expand(Fraction(4, 5))
for step in trace.steps:
    print(f"a={step.a} b={step.b} u={step.u} -> {step.next_a}/{step.next_b}")
print(trace.result)


# The numerator of the remainder drops at every step, so 4/5 needs at most
# four terms. Small numerators can still produce large denominators:

# In[3]:

print(greedy_expand(Fraction(5, 121)).result)


# ## Expansions of 1 from any starting point
#
# Consecutive unit fractions from a floor, finished off with the remainder.

# In[4]:

for floor in (2, 3, 4):
    print(floor, expand_one_from(floor))


# ## Improper fractions
#
# The proper part is expanded greedily, then each unit of the integer part gets
# its own expansion of 1, skipping denominators already taken.

# In[5]:

for v in (Fraction(3, 2), Fraction(2), Fraction(7, 3)):
    x = expand_full(v)
    print(v, len(x), "terms, smallest denominators", sorted(x)[:6])


# Integer parts grow expensive fast: k distinct unit fractions add up to at
# most H(k+1) - 1, so each extra unit multiplies the term count by about e.

# In[6]:

try:
    expand_full(30)
except ExpansionTooLarge as exc:
    print("30:", exc)
