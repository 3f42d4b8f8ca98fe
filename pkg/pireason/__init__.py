"""
pireason - prime implicants and partial entailment for propositional logic.

Features:
- Prime implicants relative to a background theory, and abduction
- Weak, plain and strong partial entailment
- Mechanical re-derivation of the inference-rule table
- Relevance, independence and novelty between formulas
- Partial goal satisfaction for agents
"""

__version__ = "1.0.0"
__author__ = "pireason"
