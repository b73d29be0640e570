#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdm/types.hpp"

namespace cdm {

/// Declares the independent target classes and their finite feature-space
/// dimensions used by the entropy valuation.
struct FeatureSchema {
    struct ClassSpec {
        std::string name;
        int dim = 0;
    };

    std::vector<ClassSpec> classes;

    int num_classes() const { return static_cast<int>(classes.size()); }

    /// Requires at least one class and every dimension >= 1.
    void validate() const;

    /// Upper bound on the entropy valuation: sum of log2(dim) over classes.
    double max_entropy_bits() const;
};

/// One identified atomic datum, optionally carrying a feature vector with
/// one feature index per schema class.
struct AtomicDatum {
    ItemId id = 0;
    std::vector<int> features;  // empty when the item is not feature-vectored

    bool has_features() const { return !features.empty(); }
};

/// A set of atomic data keyed by id. Union and subset semantics are by id.
/// Inserting an already-present id is a no-op, except that two items with the
/// same id but different feature vectors are rejected.
class Dataset {
public:
    Dataset() = default;

    static Dataset from_ids(const std::vector<ItemId>& ids);

    void insert(const AtomicDatum& item);
    void insert_id(ItemId id) { insert(AtomicDatum{id, {}}); }
    void erase(ItemId id) { items_.erase(id); }

    bool contains(ItemId id) const { return items_.count(id) != 0; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    void unite(const Dataset& other);
    static Dataset union_of(const Dataset& a, const Dataset& b);
    bool is_subset_of(const Dataset& other) const;

    const std::map<ItemId, AtomicDatum>& items() const { return items_; }
    std::vector<ItemId> ids() const;

    friend bool operator==(const Dataset& a, const Dataset& b) {
        if (a.items_.size() != b.items_.size()) return false;
        auto it = b.items_.begin();
        for (const auto& [id, _] : a.items_) {
            if (it->first != id) return false;
            ++it;
        }
        return true;
    }

private:
    std::map<ItemId, AtomicDatum> items_;
};

}  // namespace cdm
