from .suite_results import SuiteResults, run_suite
