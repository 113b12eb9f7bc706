#include "vc/certificate.hpp"

#include <type_traits>

#include "vc/checked.hpp"
#include "vc/error.hpp"

namespace vc {

std::string to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "bound"; }

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::Exact;
  if (text == "bound") return Mode::Bound;
  throw InputError("mode must be 'exact' or 'bound', got '" + text + "'");
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Json step_json(const Step& step) {
  return std::visit(
      Overloaded{
          [](const SubstitutionStep& s) -> Json {
            return {{"kind", "substitution"}, {"renaming", s.renaming}, {"u", s.words},
                    {"ordering", s.ordering}, {"exponents", s.exponents}, {"modulus", s.modulus}};
          },
          [](const PairChoiceStep& s) -> Json {
            return {{"kind", "pair"}, {"r", s.r}, {"s", s.s}, {"k", s.k}, {"valuation", s.valuation},
                    {"renaming", s.renaming}};
          },
          [](const CongruenceStep& s) -> Json {
            Json sols = Json::array();
            for (const auto& x : s.solutions)
              sols.push_back({{"i", x.i}, {"j", x.j}, {"target", x.target}, {"solution", x.solution}});
            return {{"kind", "congruence"}, {"modulus", s.modulus}, {"k", s.k}, {"solutions", sols}};
          },
          [](const MergeStep& s) -> Json {
            return {{"kind", "merge"}, {"u_prev", s.u_prev}, {"u_last", s.u_last}, {"v_prime", s.v_prime},
                    {"merged", s.merged}, {"reduced", s.reduced}};
          },
          [](const SplitStep& s) -> Json {
            return {{"kind", "split"}, {"m", s.m}, {"degenerate", s.degenerate}, {"w_prime", s.w_prime},
                    {"v1_prime", s.v1_prime}, {"w_doubleprime", s.w_doubleprime}};
          },
          [](const BaseCaseStep& s) -> Json {
            return {{"kind", "base"}, {"n", s.nvars}, {"m", s.m}, {"derived_solutions", s.derived_solutions},
                    {"value", s.value}};
          },
          [](const RecursionLevel& s) -> Json {
            Json inner = Json::array();
            for (const auto& c : s.inner) {
              Json j = {{"kernel", c.kernel}, {"quotient_order", c.quotient_order}, {"value", c.value}};
              if (c.certificate) j["certificate"] = to_json(*c.certificate);
              inner.push_back(std::move(j));
            }
            Json summands = Json::array();
            for (const auto& t : s.summands)
              summands.push_back({{"g", t.g}, {"g^k", t.power}, {"centralizer", t.centralizer_size},
                                  {"image", t.image_size}, {"inner_index", t.inner_index}, {"inner", t.inner},
                                  {"term", t.term}});
            return {{"kind", "recursion"}, {"n", s.nvars}, {"k", s.k}, {"inner", inner},
                    {"summands", summands}, {"total", s.total}};
          },
      },
      step);
}

std::uint64_t upow(std::uint64_t base, int exponent) {
  return exponent <= 0 ? 1 : checked::pow_u(base, static_cast<unsigned>(exponent));
}

ReplayResult fail(std::string message) { return {false, std::move(message)}; }

ReplayResult replay_level(const GroupTable& g, const RecursionLevel& level, Mode mode) {
  if (level.summands.size() != g.order()) return fail("recursion level has the wrong number of summands");
  std::uint64_t total = 0;
  for (Element x = 0; x < g.order(); ++x) {
    const Summand& s = level.summands[x];
    const std::string at = "summand g=" + std::to_string(x);
    if (s.g != x) return fail(at + ": summands out of order");
    if (s.power != g.pow(x, level.k)) return fail(at + ": wrong g^k");
    if (s.centralizer_size != centralizer(g, s.power).size()) return fail(at + ": wrong centralizer size");
    const SubgroupMask image = commutator_image(g, s.power);
    if (s.image_size != image.size()) return fail(at + ": wrong commutator image size");
    if (s.inner_index >= level.inner.size()) return fail(at + ": inner index out of range");
    const InnerCount& inner = level.inner[s.inner_index];
    if (!(ElementMask::of(g.order(), inner.kernel) == image)) return fail(at + ": kernel is not [g^k,G]");
    if (s.inner != inner.value) return fail(at + ": inner value differs from its kernel entry");
    const std::uint64_t term = checked::mul_u(checked::mul_u(s.centralizer_size, upow(s.image_size, level.nvars - 2)), s.inner);
    if (s.term != term) return fail(at + ": wrong term");
    total = checked::add_u(total, term);
  }
  if (total != level.total) return fail("recursion total is " + std::to_string(level.total) + ", recomputed " +
                                        std::to_string(total));

  for (std::size_t i = 0; i < level.inner.size(); ++i) {
    const InnerCount& inner = level.inner[i];
    const std::string at = "inner " + std::to_string(i);
    const SubgroupMask kernel = ElementMask::of(g.order(), inner.kernel);
    if (inner.quotient_order * kernel.size() != g.order()) return fail(at + ": wrong quotient order");
    if (mode == Mode::Bound) {
      if (inner.value != upow(inner.quotient_order, level.nvars - 3)) return fail(at + ": wrong bound value");
      continue;
    }
    if (!inner.certificate) return fail(at + ": exact mode needs a nested certificate");
    if (inner.certificate->value != inner.value) return fail(at + ": nested certificate value differs");
    Quotient q = central_quotient(g, kernel);
    ReplayResult sub = replay(q.group, *inner.certificate);
    if (!sub.ok) return fail(at + ": " + sub.message);
  }
  return {};
}

}  // namespace

Json to_json(const Certificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) steps.push_back(step_json(s));
  return {{"mode", to_string(cert.mode)}, {"word", cert.word}, {"group", cert.group}, {"n", cert.nvars},
          {"steps", steps}, {"value", cert.value}, {"bound", cert.bound}, {"holds", cert.holds}};
}

ReplayResult replay(const GroupTable& g, const Certificate& cert) {
  std::optional<std::uint64_t> value;
  for (const auto& step : cert.steps) {
    if (const auto* base = std::get_if<BaseCaseStep>(&step)) {
      std::uint64_t sols = 0;
      for (Element x : g.derived().elements()) sols += g.pow(x, base->m) == 0;
      if (sols != base->derived_solutions) return fail("base case: wrong count of g in G' with g^m = 1");
      const std::uint64_t power = upow(g.order(), base->nvars - 1);
      const std::uint64_t expect = cert.mode == Mode::Exact ? checked::mul_u(sols, power) : power;
      if (base->value != expect) return fail("base case: wrong value");
      value = base->value;
    } else if (const auto* level = std::get_if<RecursionLevel>(&step)) {
      ReplayResult r = replay_level(g, *level, cert.mode);
      if (!r.ok) return r;
      value = level->total;
    }
  }
  if (!value) return fail("certificate has no base case or recursion level");
  if (*value != cert.value) return fail("certificate value differs from its last step");
  if (cert.bound != upow(g.order(), cert.nvars - 1)) return fail("wrong bound");
  if (cert.holds != (cert.value >= cert.bound)) return fail("wrong holds flag");
  return {};
}

}  // namespace vc
