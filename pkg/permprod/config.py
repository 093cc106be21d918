# config.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
This module provides the configuration for permprod. Its properties are populated from
``config.toml`` by default and should be adequate for most settings, but there are a few
methods for overriding the realizer, solver and oracle configurations. For more extensive
custom configurations, you can initialize the class with a custom config.toml file.

"""
import os
import pathlib
import toml

from permprod.exceptions import ConfigurationError

STRATEGIES = ("constructive", "randomized", "exhaustive")


class Config:
    """
    permprod configuration class.
    """

    realizer: dict
    """
    Configuration for the two-class product realizer.
    ::
        {
            strategies (list): The search strategies to try, in order. Any of
            'constructive', 'randomized' and 'exhaustive'.
            retry_factor (int): Randomized draws per request are
            ceil(retry_factor * n * ln n). Defaults to 100.
            exhaustive_max_degree (int): The largest degree the backtracking search
            accepts. Defaults to 12.
        }
    """
    solver: dict
    """
    Configuration for the triple solver.
    ::
        {
            seed (int): Base seed mixed with (a, b, c) into the per-triple seed.
        }
    """
    oracle: dict
    """
    The default brute-force search budget.
    ::
        {
            max_degree (int): The largest degree searched. Defaults to 10.
            max_nodes (int): The largest number of candidates examined.
            time_cap (float): Wall clock limit in seconds.
        }
    """
    survey: dict
    """(dict): Survey defaults, currently the number of worker processes ('jobs')."""
    cli: dict
    """
    Command line configuration.
    ::
        {
            schema (str): The JSON schema tag. Defaults to 'permprod/1'.
            seed_env (str): Environment variable consulted when --seed is absent.
            default_seed (int): Seed used when neither is given.
        }
    """
    logging: dict
    """(dict): The log 'level' and record 'format' used by the command line."""
    reports: dict
    """(dict): Report indentation and titles."""

    def __init__(self, config_file) -> None:
        with open(config_file, "r", -1, "UTF-8") as f:
            configuration = toml.load(f)
            for k, v in configuration.items():
                setattr(self, k, v)

    def configure_realizer(
        self, strategies=STRATEGIES, retry_factor=100, exhaustive_max_degree=12
    ) -> None:
        """
        Configures the realizer.

        Args:
            strategies (tuple): The search strategies to try, in order.
            retry_factor (int): Multiplier for the randomized draw cap.
            exhaustive_max_degree (int): Largest degree for the backtracking search.
        """
        unknown = [s for s in strategies if s not in STRATEGIES]
        if unknown or not strategies:
            raise ConfigurationError(
                f"Unknown realizer strategies: {unknown}", {"strategies": list(strategies)}
            )
        self.realizer["strategies"] = list(strategies)
        self.realizer["retry_factor"] = retry_factor
        self.realizer["exhaustive_max_degree"] = exhaustive_max_degree

    def configure_solver(self, seed=0) -> None:
        """
        Configures the triple solver.

        Args:
            seed (int): Base seed mixed into every per-triple seed.
        """
        if not 0 <= seed < 2**64:
            raise ConfigurationError(f"Seed {seed} is not a 64 bit unsigned integer")
        self.solver["seed"] = seed

    def configure_oracle(self, max_degree=10, max_nodes=50_000_000, time_cap=600.0) -> None:
        """
        Configures the default oracle budget.

        Args:
            max_degree (int): The largest degree searched.
            max_nodes (int): The largest number of candidates examined.
            time_cap (float): Wall clock limit in seconds.
        """
        if max_degree < 1 or max_nodes < 1 or time_cap <= 0:
            raise ConfigurationError(
                "Oracle limits must be positive",
                {"max_degree": max_degree, "max_nodes": max_nodes, "time_cap": time_cap},
            )
        self.oracle["max_degree"] = max_degree
        self.oracle["max_nodes"] = max_nodes
        self.oracle["time_cap"] = time_cap


default_configuration = os.path.join(
    pathlib.Path(__file__).parent.parent.resolve(), "config.toml"
)
config = Config(config_file=default_configuration)
"""The default configuration"""
