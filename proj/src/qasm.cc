// Copyright 2026 The sfdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sfdd/qasm.h"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sfdd/errors.h"

namespace sfdd {

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {
    }

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= src_.size()) {
            return t;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Ident;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                t.text += take();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            t.kind = Tok::Number;
            while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
                t.text += take();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                t.text += take();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                    t.text += take();
                }
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    t.text += take();
                }
            }
        } else if (c == '"') {
            t.kind = Tok::String;
            take();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                t.text += take();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw ParseError("unterminated string", t.line, t.column);
            }
            take();
        } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            t.kind = Tok::Symbol;
            t.text = "->";
            take();
            take();
        } else if (std::string_view("();,[]+-*/^{}").find(c) != std::string_view::npos) {
            t.kind = Tok::Symbol;
            t.text = std::string(1, take());
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
        }
        return t;
    }

   private:
    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    take();
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
   public:
    explicit Parser(std::string_view src) : lexer_(src) {
        advance();
    }

    Circuit run() {
        if (is_ident("OPENQASM")) {
            advance();
            if (cur_.kind != Tok::Number) {
                fail("expected version number after OPENQASM");
            }
            if (cur_.text.rfind("2", 0) != 0) {
                fail("only OpenQASM 2 is supported");
            }
            advance();
            expect(";");
        }
        while (cur_.kind != Tok::End) {
            statement();
        }
        if (!circuit_) {
            throw ParseError("missing qreg declaration", cur_.line, cur_.column);
        }
        return std::move(*circuit_);
    }

   private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, cur_.line, cur_.column);
    }
    [[noreturn]] void fail_at(const Token &t, const std::string &msg) const {
        throw ParseError(msg, t.line, t.column);
    }

    void advance() {
        cur_ = lexer_.next();
    }
    bool is_ident(std::string_view s) const {
        return cur_.kind == Tok::Ident && cur_.text == s;
    }
    bool is_symbol(std::string_view s) const {
        return cur_.kind == Tok::Symbol && cur_.text == s;
    }
    void expect(std::string_view sym) {
        if (!is_symbol(sym)) {
            fail("expected '" + std::string(sym) + "'" + (cur_.kind == Tok::End ? " before end of input" : " but found '" + cur_.text + "'"));
        }
        advance();
    }
    std::string expect_ident() {
        if (cur_.kind != Tok::Ident) {
            fail("expected identifier");
        }
        std::string s = cur_.text;
        advance();
        return s;
    }
    long expect_integer() {
        if (cur_.kind != Tok::Number || cur_.text.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected integer");
        }
        long v = std::strtol(cur_.text.c_str(), nullptr, 10);
        advance();
        return v;
    }

    void statement() {
        Token head = cur_;
        if (head.kind != Tok::Ident) {
            fail("expected a statement");
        }
        const std::string &w = head.text;
        if (w == "include") {
            advance();
            if (cur_.kind != Tok::String) {
                fail("expected file name after include");
            }
            advance();
            expect(";");
        } else if (w == "qreg") {
            advance();
            if (circuit_) {
                fail_at(head, "only a single qreg declaration is supported");
            }
            register_name_ = expect_ident();
            expect("[");
            Token size_tok = cur_;
            long n = expect_integer();
            if (n < 1 || n > 62) {
                fail_at(size_tok, "register size must be between 1 and 62");
            }
            expect("]");
            expect(";");
            circuit_.emplace(static_cast<int>(n));
        } else if (w == "barrier") {
            while (cur_.kind != Tok::End && !is_symbol(";")) {
                advance();
            }
            expect(";");
        } else if (w == "measure" || w == "if" || w == "reset" || w == "creg" || w == "gate" || w == "opaque") {
            fail_at(head, "unsupported statement '" + w + "'");
        } else {
            gate_call(head);
        }
    }

    void gate_call(const Token &head) {
        advance();
        std::optional<GateKind> kind = gate_kind_from_name(head.text);
        if (!kind) {
            if (head.text == "mcx" || head.text == "mcz" || (head.text.size() > 2 && head.text[0] == 'c' &&
                                                             std::isdigit(static_cast<unsigned char>(head.text[1])))) {
                fail_at(head, "multi-controlled gate '" + head.text + "' is not supported (at most two controls)");
            }
            fail_at(head, "unknown gate '" + head.text + "'");
        }
        if (!circuit_) {
            fail_at(head, "gate before qreg declaration");
        }
        std::vector<double> params;
        if (is_symbol("(")) {
            advance();
            if (!is_symbol(")")) {
                params.push_back(expression());
                while (is_symbol(",")) {
                    advance();
                    params.push_back(expression());
                }
            }
            expect(")");
        }
        const GateInfo &info = gate_info(*kind);
        if (params.size() != static_cast<std::size_t>(info.params)) {
            fail_at(head, "gate '" + head.text + "' expects " + std::to_string(info.params) + " parameter(s), got " +
                              std::to_string(params.size()));
        }

        std::vector<std::optional<Qubit>> args;
        std::vector<Token> arg_tokens;
        do {
            if (!args.empty()) {
                advance();
            }
            arg_tokens.push_back(cur_);
            std::string reg = expect_ident();
            if (reg != register_name_) {
                fail_at(arg_tokens.back(), "unknown register '" + reg + "'");
            }
            if (is_symbol("[")) {
                advance();
                Token idx_tok = cur_;
                long idx = expect_integer();
                if (idx >= circuit_->num_qubits()) {
                    fail_at(idx_tok, "qubit index " + std::to_string(idx) + " out of range for register of size " +
                                         std::to_string(circuit_->num_qubits()));
                }
                expect("]");
                args.emplace_back(static_cast<Qubit>(idx));
            } else {
                args.emplace_back(std::nullopt);
            }
        } while (is_symbol(","));
        expect(";");

        std::size_t arity = static_cast<std::size_t>(info.controls + info.targets);
        if (args.size() != arity) {
            fail_at(head, "gate '" + head.text + "' expects " + std::to_string(arity) + " operand(s), got " +
                              std::to_string(args.size()));
        }
        if (arity == 1 && !args[0]) {
            for (Qubit q = 0; q < circuit_->num_qubits(); ++q) {
                circuit_->add(make_gate(*kind, {q}, params));
            }
            return;
        }
        std::vector<Qubit> operands;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (!args[i]) {
                fail_at(arg_tokens[i], "register broadcast is only supported for single-qubit gates");
            }
            operands.push_back(*args[i]);
        }
        try {
            circuit_->add(make_gate(*kind, operands, params));
        } catch (const std::exception &e) {
            fail_at(head, e.what());
        }
    }

    // expression := term { (+|-) term }
    double expression() {
        double v = term();
        while (is_symbol("+") || is_symbol("-")) {
            bool plus = cur_.text == "+";
            advance();
            double rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double term() {
        double v = unary();
        while (is_symbol("*") || is_symbol("/")) {
            bool mul = cur_.text == "*";
            Token op = cur_;
            advance();
            double rhs = unary();
            if (!mul && rhs == 0.0) {
                fail_at(op, "division by zero in parameter expression");
            }
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    double unary() {
        if (is_symbol("-")) {
            advance();
            return -unary();
        }
        if (is_symbol("+")) {
            advance();
            return unary();
        }
        return power();
    }

    double power() {
        double base = primary();
        if (is_symbol("^")) {
            advance();
            return std::pow(base, unary());
        }
        return base;
    }

    double primary() {
        if (cur_.kind == Tok::Number) {
            char *end = nullptr;
            double v = std::strtod(cur_.text.c_str(), &end);
            if (end == nullptr || *end != '\0') {
                fail("malformed number '" + cur_.text + "'");
            }
            advance();
            return v;
        }
        if (is_symbol("(")) {
            advance();
            double v = expression();
            expect(")");
            return v;
        }
        if (cur_.kind == Tok::Ident) {
            Token t = cur_;
            advance();
            if (t.text == "pi") {
                return std::numbers::pi;
            }
            static const std::vector<std::pair<std::string, double (*)(double)>> functions{
                {"sin", [](double x) { return std::sin(x); }},   {"cos", [](double x) { return std::cos(x); }},
                {"tan", [](double x) { return std::tan(x); }},   {"exp", [](double x) { return std::exp(x); }},
                {"ln", [](double x) { return std::log(x); }},    {"sqrt", [](double x) { return std::sqrt(x); }},
            };
            for (const auto &[name, fn] : functions) {
                if (t.text == name) {
                    expect("(");
                    double v = fn(expression());
                    expect(")");
                    return v;
                }
            }
            fail_at(t, "unknown identifier '" + t.text + "' in expression");
        }
        fail("expected expression");
    }

    Lexer lexer_;
    Token cur_;
    std::optional<Circuit> circuit_;
    std::string register_name_;
};

}  // namespace

Circuit parse_qasm(std::string_view source) {
    return Parser(source).run();
}

Circuit load_qasm_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_qasm(buf.str());
}

std::string print_qasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits() << "];\n";
    char buf[40];
    for (const Gate &g : c.gates()) {
        out << gate_info(g.kind).name;
        if (!g.params.empty()) {
            out << "(";
            for (std::size_t i = 0; i < g.params.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%.17g", g.params[i]);
                out << (i ? "," : "") << buf;
            }
            out << ")";
        }
        std::vector<Qubit> ops = g.operands();
        for (std::size_t i = 0; i < ops.size(); ++i) {
            out << (i ? "," : " ") << "q[" << ops[i] << "]";
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace sfdd
