#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace degloci {

// Variable namespaces of the coefficient ring: indexed families x_i, z_i,
// a_i, b_i. beta is not a Var; it owns monomial slot 0 unconditionally.
enum class VarNs : uint8_t { x = 0, z = 1, a = 2, b = 3 };

struct Var {
    VarNs ns;
    uint32_t idx;  // 1-based family index

    friend bool operator==(const Var&, const Var&) = default;
    // Canonical presentation order: namespace rank, then index.
    friend auto operator<=>(const Var& l, const Var& r) {
        if (auto c = static_cast<int>(l.ns) <=> static_cast<int>(r.ns); c != 0) return c;
        return l.idx <=> r.idx;
    }
};

inline Var vx(uint32_t i) { return {VarNs::x, i}; }
inline Var vz(uint32_t i) { return {VarNs::z, i}; }
inline Var va(uint32_t i) { return {VarNs::a, i}; }
inline Var vb(uint32_t i) { return {VarNs::b, i}; }

inline char ns_letter(VarNs ns) {
    switch (ns) {
        case VarNs::x: return 'x';
        case VarNs::z: return 'z';
        case VarNs::a: return 'a';
        case VarNs::b: return 'b';
    }
    throw std::logic_error("bad namespace");
}

inline std::string var_name(const Var& v) {
    return std::string(1, ns_letter(v.ns)) + std::to_string(v.idx);
}

inline Var var_from_name(const std::string& s) {
    if (s.size() < 2) throw std::domain_error("malformed variable name: " + s);
    VarNs ns;
    switch (s[0]) {
        case 'x': ns = VarNs::x; break;
        case 'z': ns = VarNs::z; break;
        case 'a': ns = VarNs::a; break;
        case 'b': ns = VarNs::b; break;
        default: throw std::domain_error("malformed variable name: " + s);
    }
    size_t pos = 0;
    unsigned long idx = std::stoul(s.substr(1), &pos);
    if (pos + 1 != s.size() || idx == 0)
        throw std::domain_error("malformed variable name: " + s);
    return {ns, static_cast<uint32_t>(idx)};
}

// Monomials are fixed-width exponent vectors; slot 0 is beta, the rest are
// assigned to variables on first use via this process-global registry.
inline constexpr size_t kMonomialSlots = 32;

class VarRegistry {
  public:
    static VarRegistry& instance() {
        static VarRegistry reg;
        return reg;
    }

    uint8_t slot_of(const Var& v) {
        std::lock_guard<std::mutex> lock(mu_);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == v) return static_cast<uint8_t>(i + 1);
        if (vars_.size() + 1 >= kMonomialSlots)
            throw std::domain_error(
                "variable budget exhausted: at most " +
                std::to_string(kMonomialSlots - 1) + " distinct variables per run");
        vars_.push_back(v);
        return static_cast<uint8_t>(vars_.size());
    }

    Var var_at(uint8_t slot) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (slot == 0 || slot > vars_.size())
            throw std::logic_error("unassigned monomial slot");
        return vars_[slot - 1];
    }

    size_t count() const {
        std::lock_guard<std::mutex> lock(mu_);
        return vars_.size();
    }

  private:
    VarRegistry() { vars_.reserve(kMonomialSlots); }
    mutable std::mutex mu_;
    std::vector<Var> vars_;
};

inline uint8_t var_slot(const Var& v) { return VarRegistry::instance().slot_of(v); }
inline Var slot_var(uint8_t slot) { return VarRegistry::instance().var_at(slot); }

}  // namespace degloci
