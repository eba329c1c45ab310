#include "tate/transfer.hpp"

#include <map>
#include <stdexcept>

namespace tate {

namespace {

void require_inputs(const PlanarTree& t, const std::vector<DecomposedElement>& inputs) {
    if (static_cast<int>(inputs.size()) != t.leaves())
        throw DegreeError("tree has " + std::to_string(t.leaves()) + " leaves but " + std::to_string(inputs.size()) +
                          " inputs were given");
}

void require_field(const std::vector<DecomposedElement>& inputs) {
    for (const auto& e : inputs)
        if (e.field != inputs.front().field) throw FieldMismatch("inputs over different fields");
}

std::vector<int> degrees_of(const std::vector<DecomposedElement>& inputs) {
    std::vector<int> d;
    for (const auto& e : inputs) d.push_back(e.degree);
    return d;
}

int slot_sign(int degree) { return degree >= 0 ? 1 : -1; }

}  // namespace

LocalKind LocalKind::parse(const std::string& text) {
    LocalKind k;
    std::string body;
    if (text.rfind("alpha(", 0) == 0) {
        k.alpha = true;
        body = text.substr(6);
    } else if (text.rfind("beta(", 0) == 0) {
        k.alpha = false;
        body = text.substr(5);
    } else {
        throw std::invalid_argument("local op: expected alpha(...) or beta(...)");
    }
    if (body.empty() || body.back() != ')') throw std::invalid_argument("local op: missing ')'");
    body.pop_back();
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i)
        if (i == body.size() || body[i] == ',') {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    if (parts.size() != 3 && parts.size() != 4) throw std::invalid_argument("local op: need 2 or 3 slots and an output sign");
    auto sign_of = [](char c) {
        if (c == '+') return 1;
        if (c == '-') return -1;
        throw std::invalid_argument("local op: bad sign character");
    };
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const auto& p = parts[i];
        if (p.size() != 2 || (p[0] != '0' && p[0] != '1')) throw std::invalid_argument("local op: bad slot '" + p + "'");
        k.lifted.push_back(p[0] == '1');
        k.slot_signs.push_back(sign_of(p[1]));
    }
    if (parts.back().size() != 1) throw std::invalid_argument("local op: bad output sign");
    k.out_sign = sign_of(parts.back()[0]);
    return k;
}

std::string LocalKind::name() const {
    std::string s = alpha ? "alpha(" : "beta(";
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        s += lifted[i] ? '1' : '0';
        s += slot_signs[i] > 0 ? '+' : '-';
        s += ',';
    }
    s += out_sign > 0 ? '+' : '-';
    return s + ")";
}

TransferEngine::TransferEngine(const ConjugacyData& cd, M3Sign m3_sign) : cd_(cd), m3_sign_(m3_sign) {}

TateElement TransferEngine::vertex(const std::vector<TateElement>& args) const {
    if (args.size() == 2) return cup(cd_.group(), args[0], args[1]);
    if (args.size() == 3) return m3(cd_.group(), args[0], args[1], args[2], m3_sign_);
    throw std::invalid_argument("vertex arity must be 2 or 3");
}

TateElement TransferEngine::composite(const PlanarTree& t, const std::vector<TateElement>& lifted,
                                      std::size_t& next) const {
    if (t.is_leaf()) return lifted[next++];
    std::vector<TateElement> args;
    for (const auto& c : t.children) {
        TateElement v = composite(c, lifted, next);
        args.push_back(c.is_leaf() ? std::move(v) : negate(s_hat(cd_, v)));
    }
    return vertex(args);
}

DecomposedElement TransferEngine::eval_tree(const PlanarTree& t, const std::vector<DecomposedElement>& inputs,
                                            const SignPolicy& policy) const {
    require_inputs(t, inputs);
    require_field(inputs);
    if (t.is_leaf()) return inputs[0];
    std::vector<TateElement> lifted;
    for (const auto& e : inputs) lifted.push_back(iota_hat(cd_, e));
    std::size_t next = 0;
    DecomposedElement out = rho_hat(cd_, composite(t, lifted, next));
    return policy(t, degrees_of(inputs)) < 0 ? negate(out) : out;
}

DecomposedElement TransferEngine::mhat_by_trees(const std::vector<DecomposedElement>& inputs,
                                                const SignPolicy& policy) const {
    if (inputs.empty()) throw std::invalid_argument("mhat needs at least one input");
    require_field(inputs);
    if (inputs.size() == 1) return decomposed_diff(cd_, inputs[0]);
    int total = 0;
    for (const auto& e : inputs) total += e.degree;
    DecomposedElement sum(total + 2 - static_cast<int>(inputs.size()), inputs[0].field);
    for (const auto& t : enumerate_trees(static_cast<int>(inputs.size()))) sum = sum + eval_tree(t, inputs, policy);
    return sum;
}

DecomposedElement TransferEngine::mhat(const std::vector<DecomposedElement>& inputs) const {
    if (inputs.empty()) throw std::invalid_argument("mhat needs at least one input");
    require_field(inputs);
    if (inputs.size() == 1) return decomposed_diff(cd_, inputs[0]);
    std::vector<TateElement> lifted;
    for (const auto& e : inputs) lifted.push_back(iota_hat(cd_, e));
    return mhat_lifted(lifted);
}

DecomposedElement TransferEngine::mhat_lifted(const std::vector<TateElement>& lifted) const {
    const int n = static_cast<int>(lifted.size());
    if (n < 2) throw std::invalid_argument("mhat_lifted needs at least two inputs");
    const Field f = lifted[0].field;
    std::vector<int> prefix(n + 1, 0), degrees;
    for (int i = 0; i < n; ++i) {
        if (lifted[i].field != f) throw FieldMismatch("inputs over different fields");
        prefix[i + 1] = prefix[i] + lifted[i].degree;
        degrees.push_back(lifted[i].degree);
    }
    // M(l, r): signed sum over trees on leaves l..r-1 of the vertex composites
    std::map<std::pair<int, int>, TateElement> memo;
    auto child = [&](auto&& M, int l, int r) -> TateElement {
        if (r - l == 1) return lifted[l];
        return negate(s_hat(cd_, M(M, l, r)));
    };
    auto M = [&](auto&& self, int l, int r) -> TateElement {
        auto it = memo.find({l, r});
        if (it != memo.end()) return it->second;
        Accumulator acc(f);
        for (int a = l + 1; a < r; ++a) {
            TateElement x = child(self, l, a), y = child(self, a, r);
            cup_into(cd_.group(), x, y, shift_sign({x.degree, y.degree}), acc);
        }
        for (int a = l + 1; a < r; ++a)
            for (int b = a + 1; b < r; ++b) {
                TateElement x = child(self, l, a), y = child(self, a, b), z = child(self, b, r);
                m3_into(cd_.group(), x, y, z, m3_sign_, shift_sign({x.degree, y.degree, z.degree}), acc);
            }
        TateElement v(prefix[r] - prefix[l] + 2 - (r - l), f, acc.finish());
        memo.emplace(std::make_pair(l, r), v);
        return v;
    };
    DecomposedElement out = rho_hat(cd_, M(M, 0, n));
    return shift_sign(degrees) < 0 ? negate(out) : out;
}

AnyElement TransferEngine::local_op(const LocalKind& kind, const std::vector<AnyElement>& inputs) const {
    const std::size_t k = inputs.size();
    if (k != 2 && k != 3) throw std::invalid_argument("local op: 2 or 3 inputs required");
    if (kind.lifted.size() != k || kind.slot_signs.size() != k)
        throw std::invalid_argument("local op " + kind.name() + " expects " + std::to_string(kind.lifted.size()) +
                                    " inputs, got " + std::to_string(k));
    std::vector<TateElement> args;
    int total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        int deg;
        if (kind.lifted[i]) {
            const auto* d = std::get_if<DecomposedElement>(&inputs[i]);
            if (!d) throw DegreeError("local op " + kind.name() + ": slot " + std::to_string(i + 1) + " expects a decomposed element");
            deg = d->degree;
            args.push_back(iota_hat(cd_, *d));
        } else {
            const auto* t = std::get_if<TateElement>(&inputs[i]);
            if (!t) throw DegreeError("local op " + kind.name() + ": slot " + std::to_string(i + 1) + " expects a Tate element");
            deg = t->degree;
            args.push_back(*t);
        }
        if (slot_sign(deg) != kind.slot_signs[i])
            throw DegreeError("local op " + kind.name() + ": slot " + std::to_string(i + 1) + " has degree " +
                              std::to_string(deg));
        total += deg;
        if (args.back().field != args.front().field) throw FieldMismatch("local op: inputs over different fields");
    }
    const int out_deg = total + 2 - static_cast<int>(k);
    if (slot_sign(out_deg) != kind.out_sign)
        throw DegreeError("local op " + kind.name() + ": vertex output has degree " + std::to_string(out_deg));
    TateElement v = vertex(args);
    if (kind.alpha) return rho_hat(cd_, v);
    return s_hat(cd_, v);
}

TateElement TransferEngine::composite_local(const PlanarTree& t, const std::vector<DecomposedElement>& inputs,
                                            std::size_t& next, bool root, DecomposedElement* root_out) const {
    LocalKind kind;
    kind.alpha = root;
    std::vector<AnyElement> args;
    int total = 0;
    for (const auto& c : t.children) {
        if (c.is_leaf()) {
            const auto& e = inputs[next++];
            kind.lifted.push_back(true);
            kind.slot_signs.push_back(slot_sign(e.degree));
            total += e.degree;
            args.emplace_back(e);
        } else {
            TateElement v = negate(composite_local(c, inputs, next, false, nullptr));
            kind.lifted.push_back(false);
            kind.slot_signs.push_back(slot_sign(v.degree));
            total += v.degree;
            args.emplace_back(std::move(v));
        }
    }
    kind.out_sign = slot_sign(total + 2 - t.arity());
    AnyElement out = local_op(kind, args);
    if (root) {
        *root_out = std::get<DecomposedElement>(std::move(out));
        return TateElement();
    }
    return std::get<TateElement>(std::move(out));
}

DecomposedElement TransferEngine::eval_tree_local(const PlanarTree& t, const std::vector<DecomposedElement>& inputs,
                                                  const SignPolicy& policy) const {
    require_inputs(t, inputs);
    require_field(inputs);
    if (t.is_leaf()) return inputs[0];
    std::size_t next = 0;
    DecomposedElement out;
    composite_local(t, inputs, next, true, &out);
    return policy(t, degrees_of(inputs)) < 0 ? negate(out) : out;
}

}  // namespace tate
