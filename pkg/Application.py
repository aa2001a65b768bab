##
# @mainpage Evaluation Protocol Toolkit
#
# @section description_main Description
# Standardised evaluation of cooperative multi-agent reinforcement learning experiments:
# log validation, protocol linting, aggregate scores with stratified bootstrap confidence intervals,
# probability of improvement, performance profiles, sample-efficiency curves and report tables.
#
# @section notes_main Notes
# Version 1.0
#
# @file Application.py
#
# @brief Runs the evalkit command line from a checkout, without installing the package.
#
# @section notes_Application Notes
# - Comments are Doxygen compatible.
# - Same behaviour as the installed "evalkit" console script.
##

# Internal imports
from src.CommandLine import main

if __name__ == "__main__":
    main()
