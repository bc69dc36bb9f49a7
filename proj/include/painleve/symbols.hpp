#ifndef PAINLEVE_SYMBOLS_HPP
#define PAINLEVE_SYMBOLS_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace painleve {

// Index of a variable inside a SymbolTable. Valid only together with the
// table that issued it.
struct Var {
    uint32_t index = UINT32_MAX;
    bool valid() const { return index != UINT32_MAX; }
    friend bool operator==(Var a, Var b) { return a.index == b.index; }
    friend bool operator!=(Var a, Var b) { return a.index != b.index; }
};

// Immutable ordered list of variable names. Every expression holds a
// shared_ptr to its table; indices are stable for the table's lifetime.
class SymbolTable {
public:
    explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (uint32_t i = 0; i < names_.size(); ++i) {
            auto [it, fresh] = index_.emplace(names_[i], i);
            if (!fresh) throw std::invalid_argument("symbol table: duplicate name " + names_[i]);
        }
    }

    size_t size() const { return names_.size(); }
    const std::string& name(Var v) const { return names_.at(v.index); }

    Var var(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("symbol table: unknown variable " + name);
        return Var{it->second};
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> index_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

inline SymbolTablePtr make_symbol_table(std::vector<std::string> names) {
    return std::make_shared<const SymbolTable>(std::move(names));
}

}  // namespace painleve

#endif
