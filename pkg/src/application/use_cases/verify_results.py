"""
Verification use case

Runs the cross-method checks of every module and collects the outcomes in a
VerificationReport.
"""

import logging
import time
from typing import Callable, Optional, Tuple

from ..dto.compute_request import VerifyRequest
from ...core.exceptions import TutteEngineException
from ...core.models.bivar_poly import ONE, X, Y
from ...core.models.marked_graph import FamilyShape, MarkedGraph
from ...core.models.multigraph import MultiGraph
from ...core.models.report import CheckResult, VerificationReport
from ...core.models.transfer import RecurrenceKernel
from ...core.services.benzenoid import ChainFamily, build_chain, build_dual_base, build_dual_chain
from ...core.services.benzenoid_closed_forms import (
    closed_chain, radical_kernel, tau_chain, tau_kernel, tau_radical
)
from ...core.services.closed_forms import FanlikeClosedForms
from ...core.services.corollaries import FAN_KERNEL, fan_corollary, linear_chain_corollary, wheel_corollary
from ...core.services.corpus import generate_corpus, marked_bases, two_cut_samples
from ...core.services.family_builder import build_family
from ...core.services.kirchhoff import count_spanning_trees
from ...core.services.recurrence import s_sequence, s_sum_form
from ...core.services.tutte_engine import TutteEngine
from ...infrastructure.file_handlers.fixture_loader import FixtureLoader
from ...utils.logging_config import log_function_call


Check = Callable[[], Tuple[bool, str]]

TWO_MARK_SHAPES = (FamilyShape.F, FamilyShape.F_PLUS, FamilyShape.F_PLUSPLUS, FamilyShape.W)
THREE_MARK_SHAPES = (FamilyShape.G, FamilyShape.PG, FamilyShape.PGP)

S_KERNELS = (
    ("fan", FAN_KERNEL),
    ("x+1,y", RecurrenceKernel(X + 1, Y)),
    ("x^2+y,x*y-1", RecurrenceKernel(X ** 2 + Y, X * Y - 1)),
)


class VerifyResultsUseCase:
    """
    Use case running the verification scopes

    Scopes: ``oracles`` (subset vs deletion-contraction on a seeded corpus,
    specializations, block products, two-cut splitting, branch order),
    ``appendix`` (stored chain polynomials and spanning-tree table),
    ``duality`` (chains against their fan-like duals), ``corollaries``
    (explicit fan, wheel and linear chain formulas, recurrence forms,
    spanning-tree kernels), ``families`` (closed forms against direct
    computation) and ``tau`` (three-way spanning-tree agreement).
    """

    def __init__(self, engine: TutteEngine, verification_config: Optional[dict] = None,
                 fixture_loader: Optional[FixtureLoader] = None):
        """
        Initialize use case

        Args:
            engine: Engine under test
            verification_config: The ``verification`` configuration section
            fixture_loader: Source of the stored reference data
        """
        self.engine = engine
        self.closed_forms = FanlikeClosedForms(engine)
        self.config = verification_config or {}
        self.fixture_loader = fixture_loader or FixtureLoader()
        self.logger = logging.getLogger(__name__)

    def _setting(self, key: str, default: int) -> int:
        return int(self.config.get(key, default))

    @log_function_call
    def execute(self, request: VerifyRequest,
                on_result: Optional[Callable[[CheckResult], None]] = None) -> VerificationReport:
        """
        Execute the selected scopes

        Args:
            request: Verification request
            on_result: Called with every result as soon as it is known

        Returns:
            Report of all checks; failures never raise
        """
        report = VerificationReport(scopes=list(request.scopes))
        runners = {
            "oracles": self._verify_oracles,
            "appendix": self._verify_appendix,
            "duality": self._verify_duality,
            "corollaries": self._verify_corollaries,
            "families": self._verify_families,
            "tau": self._verify_tau,
        }

        for scope in request.scopes:
            self.logger.info(f"Running verification scope: {scope}")
            for name, check in runners[scope]():
                result = report.add(self._run(scope, name, check))
                if on_result:
                    on_result(result)

        self.logger.info(f"Verification finished: {len(report.results)} checks, "
                         f"{len(report.failures)} failed")
        return report

    def _run(self, scope: str, name: str, check: Check) -> CheckResult:
        started = time.perf_counter()
        try:
            passed, detail = check()
        except TutteEngineException as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        except Exception as e:
            self.logger.exception(f"[{scope}] {name} raised unexpectedly")
            passed, detail = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - started

        if not passed:
            self.logger.warning(f"[{scope}] {name} failed: {detail}")
        return CheckResult(scope=scope, name=name, passed=passed, detail=detail,
                           counterexample="" if passed else name, elapsed_seconds=elapsed)

    @staticmethod
    def _equal(left, right, what: str) -> Tuple[bool, str]:
        if left == right:
            return True, what
        return False, f"{what}: {left} != {right}"

    # ------------------------------------------------------------------
    # Scopes
    # ------------------------------------------------------------------

    def _verify_oracles(self):
        corpus = generate_corpus(
            size=self._setting("corpus_size", 60),
            seed=self._setting("corpus_seed", 20240601),
            max_edges=self._setting("corpus_max_edges", 12),
        )
        alternate = TutteEngine(subset_edge_limit=self.engine.subset_edge_limit,
                                branch_heuristic="max_multiplicity")

        for sample in corpus:
            graph = sample.graph

            def subset_vs_delcon(graph=graph):
                return self._equal(self.engine.tutte_subset(graph), self.engine.tutte_delcon(graph),
                                   "subset = deletion-contraction")

            def specializations(graph=graph):
                t = self.engine.tutte_delcon(graph)
                trees = count_spanning_trees(graph)
                if t.evaluate(1, 1) != trees:
                    return False, f"T(1,1) = {t.evaluate(1, 1)}, matrix-tree count {trees}"
                return self._equal(t.evaluate(2, 2), 2 ** graph.edge_count, "T(2,2) = 2^|E|")

            def branch_order(graph=graph):
                return self._equal(self.engine.tutte_delcon(graph), alternate.tutte_delcon(graph),
                                   "branch heuristics agree")

            yield f"{sample.name}: subset", subset_vs_delcon
            yield f"{sample.name}: specializations", specializations
            yield f"{sample.name}: branch order", branch_order

            if len(graph.block_edge_sets()) > 1:
                def block_product(graph=graph):
                    product = ONE
                    for block in graph.blocks():
                        product = product * self.engine.tutte_subset(block)
                    return self._equal(product, self.engine.tutte_subset(graph), "block product")

                yield f"{sample.name}: blocks", block_product

        for sample in two_cut_samples(count=self._setting("two_cut_samples", 10),
                                      seed=self._setting("corpus_seed", 20240601),
                                      max_edges=self._setting("corpus_max_edges", 12)):
            def two_cut(sample=sample):
                split = self.engine.tutte_by_two_cut(sample.whole, sample.part1_edges, sample.v, sample.u)
                return self._equal(split, self.engine.tutte_subset(sample.whole), "two-cut splitting")

            yield f"{sample.name}: splitting", two_cut

    def _verify_appendix(self):
        fixtures = self.fixture_loader.load()

        for reference in fixtures.polynomials:
            def polynomial(reference=reference):
                return self._equal(closed_chain(reference.family, reference.n), reference.polynomial,
                                   "closed form = stored polynomial")

            yield f"T({reference.family.label} n={reference.n})", polynomial

        for family, n, count in fixtures.tau_items():
            def tau(family=family, n=n, count=count):
                return self._equal(tau_chain(family, n), count, "recurrence = stored count")

            yield f"tau({family.label} n={n})", tau

    def _verify_duality(self):
        for family in ChainFamily:
            for n in range(1, self._setting("duality_max_n", 2) + 1):
                def duality(family=family, n=n):
                    chain = build_chain(family, n)
                    dual = build_dual_chain(family, n)
                    return self._equal(self.engine.tutte_delcon(chain),
                                       self.engine.tutte_delcon(dual).swap_variables(),
                                       "T(chain; x, y) = T(dual; y, x)")

                yield f"{family.label} n={n}", duality

    def _verify_corollaries(self):
        max_n = self._setting("corollary_max_n", 6)
        k2 = MarkedGraph(MultiGraph.complete(2), 0, 1)

        for n in range(1, max_n + 1):
            def fan(n=n):
                closed = self.closed_forms.closed_family(k2, FamilyShape.F, n)
                if closed != fan_corollary(n, "binomial"):
                    return False, "binomial fan formula differs"
                return self._equal(closed, fan_corollary(n), "fan formula")

            yield f"fan n={n}", fan

        for n in range(3, max_n + 1):
            def wheel(n=n):
                return self._equal(self.closed_forms.closed_family(k2, FamilyShape.W, n),
                                   wheel_corollary(n), "wheel formula")

            yield f"wheel n={n}", wheel

        def wheel_three():
            return self._equal(self.closed_forms.closed_family(k2, FamilyShape.W, 3),
                               self.engine.tutte_subset(MultiGraph.complete(4)), "T(W_3) = T(K_4)")

        yield "wheel n=3 is K4", wheel_three

        linear_base = build_dual_base(ChainFamily.LINEAR)
        for n in range(1, max_n + 1):
            def linear(n=n):
                dual = self.closed_forms.closed_family(linear_base, FamilyShape.F_PLUSPLUS, n)
                return self._equal(linear_chain_corollary(n, "binomial"), dual.swap_variables(),
                                   "linear chain formula = swapped dual family")

            yield f"linear n={n}", linear

        for label, kernel in S_KERNELS:
            def agreement(kernel=kernel):
                for n in range(0, 9):
                    if s_sum_form(kernel, n) != s_sequence(kernel, n + 1):
                        return False, f"sum form differs at n={n}"
                return True, "sum form = recurrence for n <= 8"

            yield f"sequence forms ({label})", agreement

        for family in ChainFamily:
            def kernel_at_one(family=family):
                return self._equal(tau_kernel(family), radical_kernel(family),
                                   "kernel at (1,1) = radical form")

            yield f"tau kernel {family.label}", kernel_at_one

    def _verify_families(self):
        max_n = self._setting("family_max_n", 4)

        for name, marked in marked_bases():
            shapes = TWO_MARK_SHAPES + (THREE_MARK_SHAPES if marked.has_w else ())
            for shape in shapes:
                for n in range(shape.min_n, max_n + 1):
                    def direct(marked=marked, shape=shape, n=n):
                        closed = self.closed_forms.closed_family(marked, shape, n)
                        if closed != self.closed_forms.closed_family(marked, shape, n, "binomial"):
                            return False, "power and binomial forms differ"
                        return self._equal(closed, self.engine.tutte_delcon(build_family(marked, shape, n)),
                                           "closed form = direct")

                    yield f"{name} {shape.value} n={n}", direct

                minimum = 3 if shape is FamilyShape.W else 2
                for n in range(minimum, min(max_n, 3) + 1):
                    def step(marked=marked, shape=shape, n=n):
                        return self._equal(self.closed_forms.recurrence_step(marked, shape, n),
                                           self.engine.tutte_delcon(build_family(marked, shape, n)),
                                           "recurrence step = direct")

                    yield f"{name} {shape.value} n={n} recurrence", step

    def _verify_tau(self):
        for family in ChainFamily:
            for n in range(1, self._setting("tau_max_n", 4) + 1):
                def agreement(family=family, n=n):
                    counts = {
                        "recurrence": tau_chain(family, n),
                        "evaluation": closed_chain(family, n).evaluate(1, 1),
                        "matrix-tree": count_spanning_trees(build_chain(family, n)),
                        "radical": tau_radical(family, n),
                    }
                    if len(set(counts.values())) != 1:
                        return False, ", ".join(f"{method} {count}" for method, count in counts.items())
                    return True, f"{counts['recurrence']}"

                yield f"tau {family.label} n={n}", agreement
