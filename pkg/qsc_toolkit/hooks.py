app_name = "qsc_toolkit"
app_title = "QSC Toolkit"
app_publisher = "Ahmad"
app_description = "Quantum synchronizable codes of length 2^n from q-cyclotomic cosets"
app_email = "ahmad8@outlook.com"
app_license = "mit"

# Commands
# ------------------
# Each CLI subcommand resolves to an api endpoint. Endpoints take the merged
# scenario dict and return a {meta, result, certificates} document.

commands = {
    "cosets": "qsc_toolkit.qsc_toolkit.api.cosets.get_cosets",
    "factor": "qsc_toolkit.qsc_toolkit.api.cosets.get_factorization",
    "code": "qsc_toolkit.qsc_toolkit.api.code.get_code",
    "dual": "qsc_toolkit.qsc_toolkit.api.code.get_dual",
    "mindist": "qsc_toolkit.qsc_toolkit.api.code.get_min_distance",
    "augment": "qsc_toolkit.qsc_toolkit.api.code.get_augmented_pair",
    "qsc": "qsc_toolkit.qsc_toolkit.api.qsc.get_qsc_report",
    "verify-paper": "qsc_toolkit.qsc_toolkit.api.verify.verify_published",
    "sweep": "qsc_toolkit.qsc_toolkit.api.sweep.sweep",
}

# Row tables used by --format csv
# ------------------

csv_tables = {
    "cosets": ("result", "cosets"),
    "factor": ("result", "factors"),
    "verify-paper": ("result", "checks"),
    "sweep": ("result", "reports"),
}

# Settings
# ------------------

settings_env_var = "QSC_TOOLKIT_SETTINGS"
known_discrepancies = "known_discrepancies.json"
