"""
ymh-vacuum

Vacuum structure of Yang-Mills-Higgs models: stabilizers, Goldstone and
physical Higgs spaces, bosonic mass spectra, unitary gauge and discrete
vacuum-pair classification.
"""

__version__ = "1.0.0"
