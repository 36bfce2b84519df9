#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "csmforge/field.hpp"
#include "csmforge/monomial.hpp"

namespace csmforge {

// Polynomial ring descriptor: coefficient field, ordered variable names, default
// term order.  Value type with shared immutable state; identity for compatibility
// checks is (field, variable names).
class Ring {
public:
    Ring() = default;

    static Ring make(FieldSpec field, std::vector<std::string> vars,
                     TermOrder order = TermOrder::grevlex()) {
        if (vars.empty()) throw InputError("ring with no variables");
        if (static_cast<int>(vars.size()) > kMaxVars)
            throw InputError("too many ring variables (limit " + std::to_string(kMaxVars) + ")");
        auto rep = std::make_shared<Rep>();
        rep->field = field;
        rep->vars = std::move(vars);
        rep->order = order;
        for (size_t i = 0; i < rep->vars.size(); ++i) {
            if (rep->index.count(rep->vars[i]))
                throw InputError("duplicate ring variable '" + rep->vars[i] + "'");
            rep->index[rep->vars[i]] = static_cast<int>(i);
        }
        Ring r;
        r.rep_ = std::move(rep);
        return r;
    }

    bool valid() const { return static_cast<bool>(rep_); }
    const FieldSpec& field() const { return rep_->field; }
    int nvars() const { return static_cast<int>(rep_->vars.size()); }
    const std::vector<std::string>& vars() const { return rep_->vars; }
    const std::string& var_name(int i) const { return rep_->vars[static_cast<size_t>(i)]; }
    const TermOrder& order() const { return rep_->order; }

    int var_index(const std::string& name) const {
        auto it = rep_->index.find(name);
        return it == rep_->index.end() ? -1 : it->second;
    }

    bool compatible(const Ring& o) const {
        if (rep_ == o.rep_) return true;
        return rep_ && o.rep_ && rep_->field == o.rep_->field && rep_->vars == o.rep_->vars;
    }

    void require_compatible(const Ring& o) const {
        if (!compatible(o))
            throw InputError("ring mismatch: " + str() + " vs " + o.str());
    }

    // Same variables over a different coefficient field (used to run randomized
    // computations mod p on integer-coefficient input).
    Ring with_field(FieldSpec f) const { return make(f, rep_->vars, rep_->order); }

    // Ring with extra variables appended (Rabinowitsch / elimination helpers).
    Ring extended(const std::vector<std::string>& extra, TermOrder order) const {
        std::vector<std::string> v = rep_->vars;
        for (const auto& name : extra) v.push_back(name);
        return make(rep_->field, std::move(v), order);
    }

    std::string str() const {
        std::string s = rep_->field.str() + "[";
        for (size_t i = 0; i < rep_->vars.size(); ++i) {
            if (i) s += ",";
            s += rep_->vars[i];
        }
        return s + "]";
    }

private:
    struct Rep {
        FieldSpec field;
        std::vector<std::string> vars;
        TermOrder order;
        std::map<std::string, int> index;
    };

    std::shared_ptr<const Rep> rep_;
};

// Fresh auxiliary variable name not colliding with existing ones.
inline std::string fresh_var_name(const Ring& r, const std::string& base) {
    if (r.var_index(base) < 0) return base;
    for (int i = 0;; ++i) {
        std::string cand = base + "_" + std::to_string(i);
        if (r.var_index(cand) < 0) return cand;
    }
}

} // namespace csmforge
