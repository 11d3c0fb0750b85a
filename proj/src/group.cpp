#include "rcay/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rcay {

GroupSpec::GroupSpec(std::vector<std::int64_t> m) : moduli(std::move(m)) {
    if (moduli.empty()) {
        throw std::invalid_argument("group spec needs at least one modulus");
    }
    for (std::int64_t n : moduli) {
        if (n < 2) {
            throw std::invalid_argument("every modulus must be >= 2");
        }
    }
}

std::int64_t GroupSpec::order() const {
    std::int64_t n = 1;
    for (std::int64_t m : moduli) {
        if (n > (std::int64_t{1} << 56) / m) {
            throw std::overflow_error("group order too large");
        }
        n *= m;
    }
    return n;
}

namespace {

void check_element(const GroupSpec& spec, const GroupElement& g) {
    if (g.size() != spec.arity()) {
        throw std::invalid_argument("element arity does not match group spec");
    }
}

}  // namespace

GroupElement identity(const GroupSpec& spec) {
    return GroupElement(spec.arity(), 0);
}

bool is_identity(const GroupElement& g) {
    return std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; });
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    check_element(spec, a);
    check_element(spec, b);
    GroupElement out(spec.arity());
    for (std::size_t k = 0; k < spec.arity(); ++k) {
        std::int64_t s = a[k] + b[k];
        if (s >= spec.moduli[k]) s -= spec.moduli[k];
        out[k] = s;
    }
    return out;
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& a) {
    check_element(spec, a);
    GroupElement out(spec.arity());
    for (std::size_t k = 0; k < spec.arity(); ++k) {
        out[k] = a[k] == 0 ? 0 : spec.moduli[k] - a[k];
    }
    return out;
}

std::int64_t element_order(const GroupSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    std::int64_t ord = 1;
    for (std::size_t k = 0; k < spec.arity(); ++k) {
        ord = std::lcm(ord, spec.moduli[k] / std::gcd(spec.moduli[k], g[k]));
    }
    return ord;
}

std::int64_t rank_of(const GroupSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    std::int64_t r = 0;
    for (std::size_t k = spec.arity(); k-- > 0;) {
        r = r * spec.moduli[k] + g[k];
    }
    return r;
}

GroupElement element_at(const GroupSpec& spec, std::int64_t rank) {
    GroupElement g(spec.arity());
    for (std::size_t k = 0; k < spec.arity(); ++k) {
        g[k] = rank % spec.moduli[k];
        rank /= spec.moduli[k];
    }
    return g;
}

GroupElement pair_representative(const GroupSpec& spec, const GroupElement& g) {
    GroupElement inv = inverse(spec, g);
    return std::min(g, inv);
}

GeneratorSet GeneratorSet::of(const GroupSpec& spec, std::vector<GroupElement> elems) {
    GeneratorSet s;
    std::set<GroupElement> seen;
    for (auto& e : elems) {
        check_element(spec, e);
        for (std::size_t k = 0; k < spec.arity(); ++k) {
            e[k] = ((e[k] % spec.moduli[k]) + spec.moduli[k]) % spec.moduli[k];
        }
        if (is_identity(e)) {
            throw std::invalid_argument("connection set must not contain the identity");
        }
        if (seen.insert(e).second) {
            s.elements.push_back(e);
        }
    }
    std::set<GroupElement> all(s.elements.begin(), s.elements.end());
    s.inverse_closed = std::all_of(s.elements.begin(), s.elements.end(),
                                   [&](const GroupElement& e) {
                                       return all.count(inverse(spec, e)) > 0;
                                   });
    return s;
}

GeneratorSet inverse_closure(const GroupSpec& spec, std::vector<GroupElement> elems) {
    std::vector<GroupElement> both = elems;
    for (const auto& e : elems) {
        both.push_back(inverse(spec, e));
    }
    return GeneratorSet::of(spec, std::move(both));
}

std::vector<GroupElement> pair_representatives(const GroupSpec& spec, const GeneratorSet& s) {
    std::vector<GroupElement> reps;
    std::set<GroupElement> seen;
    for (const auto& e : s.elements) {
        GroupElement rep = pair_representative(spec, e);
        if (seen.insert(rep).second) {
            reps.push_back(rep);
        }
    }
    return reps;
}

bool generates(const GroupSpec& spec, const std::vector<GroupElement>& gens) {
    const std::int64_t n = spec.order();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> queue;
    queue.push_back(0);
    visited[0] = 1;
    std::int64_t count = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        GroupElement x = element_at(spec, queue[head]);
        for (const auto& g : gens) {
            std::int64_t y = rank_of(spec, add(spec, x, g));
            if (!visited[y]) {
                visited[y] = 1;
                ++count;
                queue.push_back(y);
            }
        }
    }
    return count == n;
}

std::vector<MinimalSubset> minimal_generating_subsets(const GroupSpec& spec,
                                                      const GeneratorSet& s) {
    std::vector<GroupElement> reps = pair_representatives(spec, s);
    const std::size_t r = reps.size();
    if (r > 16) {
        throw std::invalid_argument("subset enumeration capped at 16 generator pairs");
    }
    std::vector<MinimalSubset> out;
    if (!generates(spec, reps)) {
        return out;
    }
    const std::uint32_t total = 1u << r;
    std::vector<char> gen(total, 0);
    auto subset_of = [&](std::uint32_t mask) {
        std::vector<GroupElement> sub;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (1u << i)) sub.push_back(reps[i]);
        }
        return sub;
    };
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        gen[mask] = generates(spec, subset_of(mask)) ? 1 : 0;
    }
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (!gen[mask]) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < r && minimal; ++i) {
            if ((mask & (1u << i)) && gen[mask ^ (1u << i)]) minimal = false;
        }
        if (!minimal) continue;
        MinimalSubset ms;
        ms.elements = subset_of(mask);
        for (const auto& e : ms.elements) {
            ms.ceil_half_sum += (element_order(spec, e) + 1) / 2;
        }
        out.push_back(std::move(ms));
    }
    return out;
}

namespace {

std::vector<std::int64_t> split_ints(const std::string& text, char sep) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) {
            throw std::invalid_argument("bad integer token: '" + tok + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty integer list: '" + text + "'");
    }
    return out;
}

}  // namespace

GroupSpec parse_moduli(const std::string& text) {
    return GroupSpec(split_ints(text, ','));
}

std::vector<GroupElement> parse_elements(const GroupSpec& spec, const std::string& text) {
    std::vector<GroupElement> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        GroupElement e = split_ints(tok, ',');
        if (e.size() != spec.arity()) {
            throw std::invalid_argument("element '" + tok + "' has wrong arity");
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            e[k] = ((e[k] % spec.moduli[k]) + spec.moduli[k]) % spec.moduli[k];
        }
        out.push_back(std::move(e));
    }
    if (out.empty()) {
        throw std::invalid_argument("no elements in '" + text + "'");
    }
    return out;
}

std::string to_string(const GroupSpec& spec) {
    std::string s;
    for (std::size_t k = 0; k < spec.arity(); ++k) {
        if (k) s += " x ";
        s += "Z_" + std::to_string(spec.moduli[k]);
    }
    return s;
}

std::string to_string(const GroupElement& g) {
    std::string s = "(";
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(g[k]);
    }
    return s + ")";
}

}  // namespace rcay
