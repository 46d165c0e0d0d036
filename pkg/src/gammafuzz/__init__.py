"""Finite Γ-semigroups, their crisp ideals, and intuitionistic fuzzy ideals.

Submodules: :mod:`.gamma` (structures and crisp ideals), :mod:`.ifs`
(intuitionistic fuzzy sets), :mod:`.ideals` (IF ideals and composition),
:mod:`.extension` (the extension ⟨x, A⟩), :mod:`.formats` (text formats),
:mod:`.harness` (theorem verification) and :mod:`.cli`.
"""

__version__ = "0.1.0"
