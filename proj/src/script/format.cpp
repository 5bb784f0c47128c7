#include "trisect/script.hpp"

#include <sstream>

namespace trisect::script {

namespace {

void write_arg(std::ostream& os, const Arg& a) {
    if (a.kind == ArgKind::dist) {
        os << "dist(" << a.text << ", " << a.text2 << ")";
    } else {
        os << a.text;
    }
}

}  // namespace

ScriptSource format(const ConstructionProgram& p) {
    std::ostringstream os;
    for (const Param& param : p.params) {
        os << "param " << param.name << ": " << (param.kind == ParamKind::angle ? "angle" : "length") << "\n";
    }
    for (const Step& s : p.steps) {
        os << stmt_keyword(s.kind) << " " << s.name << " = ";
        if (s.op == Op::coord) {
            os << "(" << s.args.at(0).text << ", " << s.args.at(1).text << ")";
        } else {
            os << op_name(s.op) << "(";
            for (std::size_t i = 0; i < s.args.size(); ++i) {
                if (i) os << ", ";
                write_arg(os, s.args[i]);
            }
            os << ")";
        }
        if (s.pick) {
            os << " pick " << pick_name(s.pick->kind);
            if (!s.pick->ref.empty()) os << "(" << s.pick->ref << ")";
        }
        if (s.optional) os << " optional";
        os << "\n";
    }
    if (!p.exports.empty()) {
        os << "export ";
        for (std::size_t i = 0; i < p.exports.size(); ++i) {
            if (i) os << ", ";
            os << p.exports[i];
        }
        os << "\n";
    }
    return {os.str(), p.name};
}

}  // namespace trisect::script
