# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt
__version__ = "0.1.0"
