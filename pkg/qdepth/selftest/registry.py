"""
Registry of named selftest checks.

A check is a callable returning a dict of details; it fails by raising. The
registry runs every check (or those carrying a given tag) and aggregates an
overall pass/fail status.

Limitations:
- Checks run sequentially in registration order
- A failing check does not stop the run
"""

import logging
import time
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional

from qdepth.errors import QDepthError

logger = logging.getLogger(__name__)


class SelftestStatus(str, Enum):
    """Selftest status indicators."""

    PASS = "pass"
    FAIL = "fail"


class SelftestCheck:
    """
    A named check with optional tags (golden, property, scan).
    """

    def __init__(
        self,
        name: str,
        check_func: Callable[[], Dict[str, Any]],
        tags: Optional[List[str]] = None,
    ):
        self.name = name
        self.check_func = check_func
        self.tags = tags or []

    def run(self) -> Dict[str, Any]:
        """
        Run the check and return the result.

        Returns:
            Dict with name, status, tags and details (or the error message)
        """
        start = time.perf_counter()
        try:
            details = self.check_func() or {}
            status = SelftestStatus.PASS
        except QDepthError as e:
            details = {"error": e.message, "code": e.code, **e.details}
            status = SelftestStatus.FAIL
        except Exception as e:
            logger.exception("selftest check crashed", extra={"check": self.name})
            details = {"error": str(e), "code": "INTERNAL_ERROR"}
            status = SelftestStatus.FAIL
        logger.info(
            "selftest check finished",
            extra={
                "check": self.name,
                "status": status.value,
                "seconds": round(time.perf_counter() - start, 3),
            },
        )
        return {
            "name": self.name,
            "status": status,
            "details": details,
            "tags": self.tags,
        }


class SelftestRegistry:
    """
    Registry for selftest checks.
    """

    def __init__(self):
        self.checks: List[SelftestCheck] = []

    def register(self, check: SelftestCheck) -> None:
        self.checks.append(check)

    def names(self) -> List[str]:
        return [check.name for check in self.checks]

    def run_all(self, tags: Optional[Iterable[str]] = None) -> Dict[str, Any]:
        """
        Run the registered checks, restricted to those sharing a tag when
        ``tags`` is given.

        Returns:
            Dict containing overall status, pass/fail counts and check results
        """
        wanted = set(tags) if tags else None
        results = []
        overall_status = SelftestStatus.PASS

        for check in self.checks:
            if wanted is not None and not wanted.intersection(check.tags):
                continue
            result = check.run()
            results.append(result)
            if result["status"] == SelftestStatus.FAIL:
                overall_status = SelftestStatus.FAIL

        failed = sum(1 for r in results if r["status"] == SelftestStatus.FAIL)
        return {
            "status": overall_status,
            "passed": len(results) - failed,
            "failed": failed,
            "checks": results,
        }
