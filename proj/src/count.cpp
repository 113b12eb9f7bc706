#include "vc/count.hpp"

#include <charconv>

#include "vc/checked.hpp"
#include "vc/error.hpp"
#include "vc/parallel.hpp"

namespace vc {

// ------------------------------------------------------------ Restriction

Restriction Restriction::full(const GroupTable& g, int nvars) {
  return Restriction{std::vector<ElementMask>(static_cast<std::size_t>(nvars), ElementMask(g.order(), true))};
}

Restriction Restriction::derived_first(const GroupTable& g, int nvars) {
  Restriction r = full(g, nvars);
  if (nvars >= 1) r.masks[0] = g.derived();
  return r;
}

std::uint64_t Restriction::search_space() const {
  std::uint64_t space = 1;
  try {
    for (const auto& m : masks) space = checked::mul_u(space, m.size());
  } catch (const std::overflow_error&) {
    throw CapExceeded("search space does not fit in 64 bits");
  }
  return space;
}

Restriction parse_restriction(std::string_view spec, const GroupTable& g, int nvars) {
  Restriction r = Restriction::full(g, nvars);
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(pos, end - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("restriction item needs COORD:KIND", pos);
    int coord = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + colon, coord);
    if (ec != std::errc() || ptr != item.data() + colon || coord < 1 || coord > nvars)
      throw ParseError("restriction coordinate must be in 1.." + std::to_string(nvars), pos);
    std::string_view kind = item.substr(colon + 1);
    auto& mask = r.masks[static_cast<std::size_t>(coord - 1)];
    if (kind == "full")
      mask = ElementMask(g.order(), true);
    else if (kind == "derived")
      mask = g.derived();
    else if (kind == "center")
      mask = g.center();
    else
      throw ParseError("restriction kind must be full, derived or center", pos + colon + 1);
    pos = end + 1;
  }
  return r;
}

std::uint64_t power_bound(const GroupTable& g, int nvars) {
  if (nvars < 1) return 1;
  try {
    return checked::pow_u(g.order(), static_cast<unsigned>(nvars - 1));
  } catch (const std::overflow_error&) {
    throw CapExceeded("|G|^(n-1) does not fit in 64 bits");
  }
}

// ------------------------------------------------------------- evaluation

namespace {

Element eval_node(const GroupTable& g, const NodePtr& node, std::span<const Element> t) {
  switch (node->kind) {
    case NodeKind::Empty:
      return 0;
    case NodeKind::Var:
      return t[static_cast<std::size_t>(node->var - 1)];
    case NodeKind::Inverse:
      return g.inv(eval_node(g, node->children[0], t));
    case NodeKind::Power:
      return g.pow(eval_node(g, node->children[0], t), node->exponent);
    case NodeKind::Commutator:
      return g.commutator(eval_node(g, node->children[0], t), eval_node(g, node->children[1], t));
    case NodeKind::Product: {
      Element acc = 0;
      for (const auto& c : node->children) acc = g.mul(acc, eval_node(g, c, t));
      return acc;
    }
  }
  return 0;
}

void require_arity(const Word& w, std::size_t n) {
  if (n != static_cast<std::size_t>(w.nvars()))
    throw InputError("tuple of length " + std::to_string(n) + " for a word in " +
                     std::to_string(w.nvars()) + " variables");
}

}  // namespace

Element evaluate_word(const GroupTable& g, const Word& w, std::span<const Element> tuple) {
  require_arity(w, tuple.size());
  for (Element e : tuple)
    if (e >= g.order()) throw InputError("tuple element out of range");
  return eval_node(g, w.root(), tuple);
}

EvalPlan::EvalPlan(const GroupTable& g, const Word& w) : group_(&g), nvars_(w.nvars()) {
  compile(w.root(), 0);
}

void EvalPlan::compile(const NodePtr& node, std::size_t depth) {
  // `depth` is the stack height before this node's value is pushed.
  depth_ = std::max(depth_, depth + 1);
  switch (node->kind) {
    case NodeKind::Empty:
      code_.push_back({Op::Identity, 0});
      return;
    case NodeKind::Var:
      code_.push_back({Op::Var, static_cast<std::uint32_t>(node->var - 1)});
      return;
    case NodeKind::Inverse:
      compile(node->children[0], depth);
      code_.push_back({Op::Inv, 0});
      return;
    case NodeKind::Power: {
      compile(node->children[0], depth);
      std::vector<Element> table(group_->order());
      for (Element x = 0; x < group_->order(); ++x) table[x] = group_->pow(x, node->exponent);
      code_.push_back({Op::Pow, static_cast<std::uint32_t>(pow_tables_.size())});
      pow_tables_.push_back(std::move(table));
      return;
    }
    case NodeKind::Commutator:
      compile(node->children[0], depth);
      compile(node->children[1], depth + 1);
      code_.push_back({Op::Comm, 0});
      return;
    case NodeKind::Product: {
      if (node->children.empty()) {
        code_.push_back({Op::Identity, 0});
        return;
      }
      compile(node->children[0], depth);
      for (std::size_t i = 1; i < node->children.size(); ++i) {
        compile(node->children[i], depth + 1);
        code_.push_back({Op::Mul, 0});
      }
      return;
    }
  }
}

Element EvalPlan::run(std::span<const Element> tuple, std::span<Element> stack) const {
  const GroupTable& g = *group_;
  std::size_t sp = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Var:
        stack[sp++] = tuple[in.arg];
        break;
      case Op::Identity:
        stack[sp++] = 0;
        break;
      case Op::Mul:
        --sp;
        stack[sp - 1] = g.mul(stack[sp - 1], stack[sp]);
        break;
      case Op::Inv:
        stack[sp - 1] = g.inv(stack[sp - 1]);
        break;
      case Op::Pow:
        stack[sp - 1] = pow_tables_[in.arg][stack[sp - 1]];
        break;
      case Op::Comm:
        --sp;
        stack[sp - 1] = g.commutator(stack[sp - 1], stack[sp]);
        break;
    }
  }
  return stack[0];
}

Element EvalPlan::operator()(std::span<const Element> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(nvars_))
    throw InputError("tuple length does not match the plan's variable count");
  std::vector<Element> scratch(depth_);
  return run(tuple, scratch);
}

// --------------------------------------------------------------- counting

namespace {

void check_cap(std::uint64_t space, const CountOptions& options) {
  if (space > options.cap && !options.force)
    throw CapExceeded("search space of " + std::to_string(space) + " evaluations exceeds cap " +
                      std::to_string(options.cap) + " (use --force)");
}

// Calls visit(value) for every tuple of S, with the first coordinate's
// elements split across workers. visit is constructed per slice by make_visitor(slice).
template <typename MakeVisitor>
std::size_t enumerate(const EvalPlan& plan, const Restriction& r, unsigned workers,
                      MakeVisitor&& make_visitor) {
  const std::size_t n = r.masks.size();
  std::vector<std::vector<Element>> lists;
  lists.reserve(n);
  for (const auto& m : r.masks) lists.push_back(m.elements());

  if (n == 0) {
    auto visit = make_visitor(std::size_t{0});
    std::vector<Element> scratch(plan.stack_depth());
    visit(plan.run({}, scratch));
    return 1;
  }

  return parallel_slices(lists[0].size(), workers, [&](std::size_t slice, std::size_t begin, std::size_t end) {
    auto visit = make_visitor(slice);
    std::vector<Element> tuple(n), scratch(plan.stack_depth());
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t i = 1; i < n; ++i) tuple[i] = lists[i][0];
    for (std::size_t first = begin; first < end; ++first) {
      tuple[0] = lists[0][first];
      std::fill(idx.begin() + 1, idx.end(), 0);
      for (std::size_t i = 1; i < n; ++i) tuple[i] = lists[i][0];
      while (true) {
        visit(plan.run(tuple, scratch));
        // Odometer over coordinates n-1 .. 1, last coordinate fastest.
        std::size_t c = n - 1;
        while (c >= 1) {
          if (++idx[c] < lists[c].size()) {
            tuple[c] = lists[c][idx[c]];
            break;
          }
          idx[c] = 0;
          tuple[c] = lists[c][0];
          --c;
        }
        if (c == 0) break;
      }
    }
  });
}

}  // namespace

CountResult count_solutions(const GroupTable& g, const Word& w, const Restriction& r,
                            const CountOptions& options) {
  if (r.nvars() != w.nvars())
    throw InputError("restriction has " + std::to_string(r.nvars()) + " coordinates, word has " +
                     std::to_string(w.nvars()) + " variables");
  for (const auto& m : r.masks) {
    if (m.parent_order() != g.order()) throw InputError("restriction mask belongs to a different group");
    if (m.empty()) throw InputError("restriction masks must be nonempty");
  }
  CountResult result;
  result.search_space = r.search_space();
  result.bound = power_bound(g, w.nvars());
  check_cap(result.search_space, options);

  EvalPlan plan(g, w);
  std::vector<std::uint64_t> partial(std::max(1u, options.workers), 0);
  std::size_t slices = enumerate(plan, r, options.workers, [&](std::size_t slice) {
    return [&counter = partial[slice]](Element v) { counter += (v == 0); };
  });
  for (std::size_t s = 0; s < slices; ++s) result.count += partial[s];
  result.bound_ok = result.count >= result.bound;
  return result;
}

CountResult count_solutions(const GroupTable& g, const Word& w, const CountOptions& options) {
  return count_solutions(g, w, Restriction::full(g, w.nvars()), options);
}

std::vector<std::uint64_t> fiber_histogram(const GroupTable& g, const Word& w, const CountOptions& options) {
  Restriction r = Restriction::full(g, w.nvars());
  check_cap(r.search_space(), options);
  EvalPlan plan(g, w);
  std::vector<std::vector<std::uint64_t>> partial(std::max(1u, options.workers),
                                                  std::vector<std::uint64_t>(g.order(), 0));
  std::size_t slices = enumerate(plan, r, options.workers, [&](std::size_t slice) {
    return [&hist = partial[slice]](Element v) { ++hist[v]; };
  });
  std::vector<std::uint64_t> fibers(g.order(), 0);
  for (std::size_t s = 0; s < slices; ++s)
    for (std::size_t x = 0; x < fibers.size(); ++x) fibers[x] += partial[s][x];
  return fibers;
}

}  // namespace vc
