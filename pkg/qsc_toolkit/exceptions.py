# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Exceptions raised by QSC Toolkit

ValidationError marks a precondition the caller can fix (exit status 1),
VerificationError marks an internal cross-check that disagreed (exit status 2).
"""


class QscError(Exception):
    exit_code = 2


class ValidationError(QscError):
    exit_code = 1


class VerificationError(QscError):
    exit_code = 2
