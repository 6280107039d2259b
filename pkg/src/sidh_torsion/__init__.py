"""Torsion-point attacks on toy SIDH instances, insecure-parameter
generators and the attack cost model."""

__version__ = "0.1.0"
