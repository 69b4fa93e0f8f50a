#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "platknot/plat.hpp"

namespace platknot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// {"plat-format":1,"m":...,"n":...,"rows":[[...],...]}
nlohmann::json matrix_to_json(const TwistMatrix& M);
TwistMatrix matrix_from_json(const nlohmann::json& j);

// Text or JSON, decided by the first non-blank character.
TwistMatrix parse_matrix_document(std::string_view text);
TwistMatrix read_matrix_file(const std::string& path);

// Runs one `plat` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace platknot::cli
