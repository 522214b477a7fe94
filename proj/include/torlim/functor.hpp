#pragma once

#include <string>

#include "torlim/fp_module.hpp"

namespace torlim {

// Additive right exact functor on finitely presented abelian groups, given by
// its action on objects and on maps. Implementations must preserve identities,
// composition and zero maps; the verification suites exercise these laws.
class Functor {
public:
    virtual ~Functor() = default;
    virtual FpModule on_object(const FpModule& m) const = 0;
    virtual ModuleMap on_map(const ModuleMap& f) const = 0;
    virtual std::string name() const = 0;
};

// The shipped instance: - (x) A for a fixed parameter module A. Its left
// derived functors are the Tor groups Tor_n(-, A).
class TensorFunctor final : public Functor {
public:
    explicit TensorFunctor(FpModule parameter) : parameter_(std::move(parameter)) {}

    FpModule on_object(const FpModule& m) const override { return tensor(m, parameter_); }
    ModuleMap on_map(const ModuleMap& f) const override { return tensor_map(f, parameter_); }
    std::string name() const override { return "tensor[" + parameter_.canonical_form().to_string() + "]"; }

    const FpModule& parameter() const { return parameter_; }

private:
    FpModule parameter_;
};

}  // namespace torlim
