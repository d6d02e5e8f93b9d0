// Copyright (c) 2026 The Synprune Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace synprune {

/// The shipped Python convention database, embedded so the library works
/// without locating a data file. Kept byte-identical to
/// data/conventions_python.txt (asserted in tests).
inline constexpr const char* kDefaultConventionsText = R"__conv__(# Python syntax-convention database.
#
# One record per line:
#   id | category | node_kind | condition-pattern | consequent-list
#
# Pattern vocabulary:
#   bare word / punctuation   literal terminal (keyword or single lexeme)
#   <name>                    nonterminal placeholder, matches a non-empty
#                             token run; <name?> may also match an empty run
#   [SP] [BR] [IND]           space, line break, indentation terminals
#   [CMP]                     comparison-operator terminal class
#   [CLQ]                     closing-quote terminal class (covers ', ",
#                             triple quotes, and prefixed literals)
#
# The quote literal ' in a condition stands for any opening-quote run.
#
# version: py311-supplementary.1

# --- Data model ------------------------------------------------------------
dm.list            | DataModel | List      | [                         | ]
dm.slice           | DataModel | Subscript | [                         | ]
dm.dict            | DataModel | Dict      | {                         | }
dm.set             | DataModel | Set       | {                         | }
dm.string          | DataModel | Str       | '                         | [CLQ]
dm.bytes           | DataModel | Bytes     | '                         | [CLQ]
dm.object          | DataModel | Attribute | <identifier>              | .
dm.tuple           | DataModel | Tuple     | (                         | )

# --- Expressions -----------------------------------------------------------
expr.call.close    | Expression | Call          | <identifier> (                        | )
expr.lambda.colon  | Expression | Lambda        | lambda <params?>                      | :
expr.cond.else     | Expression | IfExp         | <expr> if <cond>                      | else
expr.comp.in       | Expression | Comprehension | <expr> for <target>                   | in
expr.comp.close    | Expression | Comprehension | <expr> for <target> in <iterable>     | ] } )
expr.compare.chain | Expression | Compare       | <expr> [CMP] <expr>                   | [CMP]

# --- Single statements -----------------------------------------------------
sstmt.import.as    | SingleStatement | Import     | import <module> | as
sstmt.from.import  | SingleStatement | ImportFrom | from <module>   | import

# --- Compound statements ---------------------------------------------------
cstmt.if.colon        | CompoundStatement | If          | if <assignment_expression>        | :
cstmt.if.suite        | CompoundStatement | If          | if <assignment_expression> :      | [SP] [BR] [IND]
cstmt.if.branch       | CompoundStatement | If          | if <assignment_expression> :      | elif else
cstmt.for.in          | CompoundStatement | For         | for <target_list>                 | in
cstmt.for.colon       | CompoundStatement | For         | for <target_list> in <starred_list> | :
cstmt.for.suite       | CompoundStatement | For         | for <target_list> in <starred_list> : | [SP] [BR] [IND]
cstmt.try.colon       | CompoundStatement | Try         | try                               | :
cstmt.try.suite       | CompoundStatement | Try         | try :                             | [SP] [BR] [IND]
cstmt.try.except      | CompoundStatement | Try         | try : <suite?>                    | except
cstmt.try.except.as   | CompoundStatement | Try         | try : <suite?> except <expression> | as
cstmt.try.except.colon | CompoundStatement | Try        | try : <suite?> except <expression> as <name> | :
cstmt.try.except.suite | CompoundStatement | Try        | try : <suite?> except <expression> as <name> : | [SP] [BR] [IND]
cstmt.try.final       | CompoundStatement | Try         | try : <suite?> except <expr> as <identifier> : <suite?> | finally else
cstmt.with.as         | CompoundStatement | With        | with <with_item>                  | as
cstmt.with.colon      | CompoundStatement | With        | with <with_item> as <target>      | :
cstmt.with.suite      | CompoundStatement | With        | with <with_item> :                | [SP] [BR] [IND]
cstmt.with.as.suite   | CompoundStatement | With        | with <with_item> as <target> :    | [SP] [BR] [IND]
cstmt.class.colon     | CompoundStatement | ClassDef    | class <classname>                 | :
cstmt.class.suite     | CompoundStatement | ClassDef    | class <classname> :               | [SP] [BR] [IND]
cstmt.class.bases     | CompoundStatement | ClassDef    | class <classname> ( <identifier>  | , )
cstmt.class.bases.colon | CompoundStatement | ClassDef  | class <classname> ( <identifier> ) | :
cstmt.def.param0      | CompoundStatement | FunctionDef | def <funcname> (                  | self )
cstmt.def.params      | CompoundStatement | FunctionDef | def <funcname> ( <identifier>     | , )
cstmt.def.arrow       | CompoundStatement | FunctionDef | def <funcname> ( <parameters?> )  | ->
cstmt.def.colon       | CompoundStatement | FunctionDef | def <funcname> ( <parameters?> )  | :
cstmt.def.suite       | CompoundStatement | FunctionDef | def <funcname> ( <parameters?> ) : | [SP] [BR] [IND]
cstmt.while.colon     | CompoundStatement | While       | while <condition>                 | :
cstmt.while.suite     | CompoundStatement | While       | while <condition> :               | [SP] [BR] [IND]
cstmt.while.else      | CompoundStatement | While       | while <condition> : <suite?>      | else
cstmt.match.colon     | CompoundStatement | Match       | match <subject>                   | :
cstmt.match.suite     | CompoundStatement | Match       | match <subject> :                 | [SP] [BR] [IND] case
)__conv__";

}  // namespace synprune
