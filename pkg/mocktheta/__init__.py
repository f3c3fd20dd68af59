"""mocktheta: exact q-series over Q(zeta_24) and a verification harness for mock theta identities."""

__version__ = "0.1.0"
