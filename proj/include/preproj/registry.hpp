#pragma once

#include "preproj/decompose.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace preproj {

class RegistryOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RegistryCaps {
    std::size_t max_modules = 64;
    std::size_t max_dim = 64;
};

/// Summand multiplicities (registry id, count), sorted by id.
using Multiset = std::vector<std::pair<std::size_t, std::size_t>>;

/// Isomorphism classes of indecomposable modules over one algebra, each with a
/// canonical representative and a stable id (order of discovery).
class IndecRegistry {
public:
    IndecRegistry(AlgebraPtr a, Side side = Side::Left);

    const AlgebraPtr& algebra() const { return algebra_; }
    Side side() const { return side_; }
    std::size_t size() const { return modules_.size(); }
    const ModulePtr& module(std::size_t id) const { return modules_[id]; }
    const std::string& name(std::size_t id) const { return names_[id]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> id_of_name(const std::string& name) const;

    /// Id of an indecomposable module, if registered.
    std::optional<std::size_t> find(const Representation& x) const;
    /// Registers an indecomposable module; returns (id, newly added).
    std::pair<std::size_t, bool> insert(const ModulePtr& x);
    /// Decomposes x and registers any unseen summands. Not allowed once frozen.
    Multiset absorb(const ModulePtr& x);
    /// Decomposition into registered classes; throws if a summand is unknown.
    Multiset decompose_ids(const ModulePtr& x) const;

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }
    void set_names(std::vector<std::string> names);

    /// Direct sum of registered modules with multiplicities.
    Representation sum(const Multiset& m) const;
    Representation sum(const std::vector<std::size_t>& ids) const;

private:
    AlgebraPtr algebra_;
    Side side_;
    std::vector<ModulePtr> modules_;
    std::vector<std::string> names_;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_dims_;
    bool frozen_ = false;
};

/// Closure of simples, projectives and injectives under radical, top, socle,
/// quotient by socle, Ω, Ω⁻¹, ν and kernels, cokernels and images of Hom
/// basis maps between registered modules. Names are assigned afterwards and
/// the registry is frozen.
IndecRegistry all_indecomposables(const AlgebraPtr& a, RegistryCaps caps = {});

/// Names: P1..P3, S1..S3, M12, M21, M23, M32, M, W for the A3 preprojective
/// algebra; Pi, Si and "Pi/rad^k(Pi)" for truncated cyclic algebras;
/// otherwise Pi and Si for projectives and simples, X<id> for the rest.
std::vector<std::string> default_names(const IndecRegistry& r);

/// The (name, dimension vector, top vector) table used for type A3.
struct NamedShape {
    std::string name;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> top;
};
const std::vector<NamedShape>& a3_name_table();

/// Sum of the images of all maps x -> y (inclusion into y).
Morphism trace_in(const ModulePtr& x, const ModulePtr& y);
/// y ∈ gen(x).
bool in_gen(const Representation& x, const Representation& y);
/// x ∈ sub(y), i.e. Dx ∈ gen(Dy).
bool in_sub(const Representation& x, const Representation& y);

bool is_self_injective(const AlgebraPtr& a);
bool is_weakly_symmetric(const AlgebraPtr& a);

}  // namespace preproj
