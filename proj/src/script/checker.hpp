#pragma once

#include "trisect/script.hpp"

#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace trisect::script::detail {

enum class Sym { angle_param, length_param, point, line, ray, circle, angle };

/// Incremental def-before-use and signature checker.
class Checker {
public:
    void add_param(const Param& p, SourcePos pos);
    /// `arg_pos` may be empty, in which case diagnostics point at `pos`.
    void add_step(const Step& s, SourcePos pos, std::span<const SourcePos> arg_pos = {}, SourcePos pick_pos = {});
    void add_export(const std::string& name, SourcePos pos);

private:
    Sym lookup(const std::string& name, SourcePos pos) const;
    void define(const std::string& name, Sym sym, SourcePos pos);

    std::unordered_map<std::string, Sym> symbols_;
    std::unordered_set<std::string> exported_;
};

bool is_reserved(std::string_view word);

}  // namespace trisect::script::detail
