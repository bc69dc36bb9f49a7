#ifndef PAINLEVE_WEYL_HPP
#define PAINLEVE_WEYL_HPP

#include <map>
#include <string>
#include <vector>

#include "painleve/birational_map.hpp"
#include "painleve/systems.hpp"

namespace painleve {

// One relation word^order = identity of the Dynkin presentation.
struct Relation {
    std::vector<std::string> word;
    int order;
};

struct WeylPresentation {
    std::vector<std::string> generator_names;
    std::vector<Relation> relations;
};

// Word in the generators whose composed parameter action is expected to be
// a pure translation on the constraint plane. Words cataloged without an
// expected shift get their shift computed and reported, not asserted.
struct TranslationWord {
    std::string name;
    std::vector<std::string> word;
    std::optional<std::vector<Rational>> expected_shift;
};

// Generator catalog, presentation and translation words for one system.
class GeneratorCatalog {
public:
    explicit GeneratorCatalog(const HamiltonianSystem& sys);

    const HamiltonianSystem& system() const { return *sys_; }
    const BirationalMap& generator(const std::string& id) const;
    bool has_generator(const std::string& id) const { return maps_.count(id) != 0; }
    const std::vector<std::string>& generator_order() const { return order_; }
    const WeylPresentation& presentation() const { return presentation_; }
    const std::vector<TranslationWord>& translations() const { return translations_; }

    MapWord word(const std::vector<std::string>& ids) const;

    // Composed parameter action of a word; errors if the word references an
    // unknown generator.
    ParamMap word_action(const std::vector<std::string>& ids) const;

    // Shift vector of the word's parameter action restricted to the
    // constraint plane; nullopt when the action is not a translation there.
    std::optional<std::vector<Rational>> translation_shift(const TranslationWord& t) const;

private:
    void add(BirationalMap m);

    const HamiltonianSystem* sys_;
    std::map<std::string, BirationalMap> maps_;
    std::vector<std::string> order_;
    WeylPresentation presentation_;
    std::vector<TranslationWord> translations_;
};

// Parses "s2 s3 s2" into generator ids.
std::vector<std::string> parse_word(const std::string& text);
std::string format_word(const std::vector<std::string>& word);

// word^order = 1 by point sampling, plus a minimality probe: the smallest
// k < order with word^k = 1, when one exists (a sanity warning, the order
// itself is the claim).
struct RelationOutcome {
    Ternary holds = Ternary::Indeterminate;
    std::optional<int> non_minimal_power;
};

RelationOutcome check_relation(const GeneratorCatalog& cat, const Relation& rel, int points,
                               uint64_t master_seed, const std::string& seed_id);

}  // namespace painleve

#endif
