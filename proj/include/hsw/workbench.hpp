#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hsw/error.hpp"
#include "hsw/representation.hpp"
#include "hsw/superalgebra.hpp"
#include "hsw/ybe.hpp"

namespace hsw {

/// Syntax or semantic error in a workbench file, with a 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A name that does not resolve to an object of the requested kind.
class UnresolvedReference : public Error {
public:
    using Error::Error;
};

template <class T>
struct Named {
    std::string name;
    T value;
};

/// Even map declared with `map <name> on <target>`; `on` names an algebra (endomorphism)
/// or a representation (map from the module into its base algebra).
struct MapDef {
    std::string on;
    EvenLinearMap map;
};

struct RepDef {
    std::string of;
    Representation rep;
};

struct TensorDef {
    std::string on;
    TensorElement tensor;
};

struct FormDef {
    std::string on;
    BilinearForm form;
};

/// Parsed contents of a workbench file. Blocks keep their file order.
struct Workbench {
    Field field = Field::rationals();
    std::vector<Named<mpq_class>> params;
    std::vector<Named<SuperAlgebra>> algebras;
    std::vector<Named<DendriformAlgebra>> dendriforms;
    std::vector<Named<MapDef>> maps;
    std::vector<Named<RepDef>> reps;
    std::vector<Named<TensorDef>> tensors;
    std::vector<Named<FormDef>> forms;

    /// Lookups throw UnresolvedReference.
    const SuperAlgebra& algebra(const std::string& name) const;
    const DendriformAlgebra& dendriform(const std::string& name) const;
    const MapDef& map(const std::string& name) const;
    const Representation& rep(const std::string& name) const;
    const TensorElement& tensor(const std::string& name) const;
    const BilinearForm& form(const std::string& name) const;

    bool has_algebra(const std::string& name) const;
    bool has_dendriform(const std::string& name) const;
};

/// Line-oriented format:
///
///     field gf3
///     params
///       c = 2
///     end
///     algebra K3
///       basis e:even x:odd y:odd
///       supercommutative
///       product e x = 1/(2*c) x
///       twist x = 1/c x
///     end
///
/// Unlisted products, actions and entries are zero; unlisted twist images are the identity.
/// Throws ParseError on any malformed or inconsistent input.
Workbench parse_workbench(const std::string& text);
Workbench load_workbench(const std::string& path);

/// Fully expanded text that parses back to structurally identical objects.
std::string emit_workbench(const Workbench& wb);

/// Block text for a single object, as it would appear in a workbench file.
std::string emit_algebra(const std::string& name, const SuperAlgebra& a);
std::string emit_dendriform(const std::string& name, const DendriformAlgebra& d);
std::string emit_map(const std::string& name, const std::string& on, const EvenLinearMap& m);
std::string emit_rep(const std::string& name, const std::string& of, const Representation& r);
std::string emit_tensor(const std::string& name, const std::string& on, const TensorElement& t);
std::string emit_form(const std::string& name, const std::string& on, const BilinearForm& b);

} // namespace hsw
