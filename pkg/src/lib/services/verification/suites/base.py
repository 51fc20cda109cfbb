#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Base Verification Suite

Shared configuration and report of the invariant suites. Every invariant
is checked over an enumerated family of cases; the first failing case is
reported as the counterexample.
"""

import abc
from typing import Any, Callable, Dict, Iterable, List, Optional
from pydantic import BaseModel, Field
from src.lib.core.log import Logger
from src.lib.services.verification.suites.error_handler import suite_error_handler


logger = Logger().get_logger()


class InvariantReport(BaseModel):
    """
    Outcome of one invariant.
    """
    name: str = Field(
        ...,
        description="Name of the invariant."
    )
    passed: bool = Field(
        ...,
        description="True when every case satisfied the invariant."
    )
    checked: int = Field(
        default=0,
        description="Number of cases examined."
    )
    counterexample: Optional[str] = Field(
        default=None,
        description="First failing case."
    )


class BaseVerificationSuite(abc.ABC):
    """
    Abstract base class for invariant suites.
    """

    class Config(BaseModel):
        """
        Configuration for the suite.
        """
        type: str = Field(
            ...,
            description="Type of the suite."
        )
        max_degree: int = Field(
            default=4,
            ge=1,
            le=8,
            description="Largest total degree of the enumerated cases."
        )
        seed: int = Field(
            default=0,
            description="Seed for sampled cases."
        )
        alphabet: str = Field(
            default="ab",
            min_length=1,
            description="Decorations of the generators, one character each."
        )

    class Result(BaseModel):
        """
        Result of the suite.
        """
        status: str = Field(
            default="success",
            description="Status of the operation, e.g., 'success' or 'failure'."
        )
        error_message: Optional[str] = Field(
            default=None,
            description="Detailed error message if the operation failed."
        )
        suite: Optional[str] = Field(
            default=None,
            description="Type of the suite."
        )
        passed: Optional[bool] = Field(
            default=None,
            description="True when every invariant passed."
        )
        invariants: List[InvariantReport] = Field(
            default_factory=list,
            description="One report per invariant."
        )

    def __init__(self, config: Dict[str, Any]):
        self.config = self.Config(**config)
        self.result = self.Result(suite=self.config.type)

    @property
    def alphabet(self) -> List[str]:
        """Generator labels."""
        return list(self.config.alphabet)

    @abc.abstractmethod
    def invariants(self) -> List[Callable[[], InvariantReport]]:
        """
        The invariant checks of the suite.

        :return: Callables producing one report each.
        """

    @suite_error_handler("Error running verification suite")
    def run(self) -> 'BaseVerificationSuite.Result':
        """
        Check every invariant.

        :return: The report; failures of individual invariants do not stop the run.
        """
        self.result = self.Result(suite=self.config.type)
        for check in self.invariants():
            self.result.invariants.append(self._guarded(check))
        self.result.passed = all(report.passed for report in self.result.invariants)
        logger.info(f"Suite {self.config.type} at degree {self.config.max_degree}: "
                    f"passed={self.result.passed}")
        return self.result

    @staticmethod
    def _guarded(check: Callable[[], InvariantReport]) -> InvariantReport:
        try:
            return check()
        except Exception as e:  # pylint: disable=W0718
            name = getattr(check, "__name__", "invariant").removeprefix("check_")
            logger.error(f"Invariant {name} raised: {e}")
            return InvariantReport(name=name, passed=False, counterexample=f"{type(e).__name__}: {e}")

    @staticmethod
    def check(name: str, cases: Iterable[Any], predicate: Callable[[Any], bool],
              describe: Callable[[Any], str] = repr) -> InvariantReport:
        """
        Check a predicate on every case.

        :param name: Invariant name.
        :param cases: Cases to examine.
        :param predicate: Returns True when the case satisfies the invariant.
        :param describe: Text of a failing case.
        :return: The report.
        """
        checked = 0
        for case in cases:
            checked += 1
            if not predicate(case):
                logger.debug(f"Invariant {name} failed on {describe(case)}")
                return InvariantReport(name=name, passed=False, checked=checked,
                                       counterexample=describe(case))
        return InvariantReport(name=name, passed=True, checked=checked)
