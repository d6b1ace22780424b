#pragma once

#include "framelet/bank.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <variant>

namespace framelet {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "r11 r12; r21 r22" (rows separated by ';')
IntMatrix parse_dilation(const std::string& s);
std::string dilation_to_string(const IntMatrix& M);

// filter files: dim, radicand, optional scale, support box, and coefficient
// rows laid out with the second coordinate descending across rows and the
// first coordinate ascending within a row (1-D: a single ascending row)
nlohmann::json filter_to_json(const Filter& f);
Filter filter_from_json(const nlohmann::json& j);

Filter load_filter(const std::string& path);
void save_filter(const Filter& f, const std::string& path);

using AnyBank = std::variant<DualBank, QuasiTightBank>;

nlohmann::json bank_to_json(const DualBank& bank);
nlohmann::json bank_to_json(const QuasiTightBank& bank);
AnyBank load_bank(const std::string& path);
void save_bank(const AnyBank& bank, const std::string& path);

}  // namespace framelet
