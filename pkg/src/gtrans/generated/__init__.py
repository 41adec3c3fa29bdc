"""Checked-in output of the code generator for the showcase types. Do not edit."""
