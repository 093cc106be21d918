# reports/__init__.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the covering theory reports and the order triple survey.

"""
from .hurwitz import NecessityVerdict, genus, index_sum, necessity_check, ramification
from .cover_report import BranchSpec, CoverReport, branch_data_report
from .survey_report import SurveyReport, check_triple
