"""Computational core: one subpackage per area, plus the run orchestration."""
