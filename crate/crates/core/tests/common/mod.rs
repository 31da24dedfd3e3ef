#![allow(dead_code)]

use std::process::{Command, Output};

pub fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamdecomp"))
        .args(args)
        .output()
        .expect("run hamdecomp")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Line-oriented check of the DOT subset we emit: a `digraph` header, node
/// and edge statements with optional `[key=value]` attribute lists, and a
/// closing brace.
pub fn is_valid_dot(text: &str) -> bool {
    let ident = |s: &str| {
        !s.is_empty()
            && s.chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
    };
    let attrs = |s: &str| {
        let Some(inner) = s.strip_prefix('[').and_then(|s| s.strip_suffix(']')) else {
            return false;
        };
        inner.split(',').all(|kv| {
            let mut it = kv.trim().splitn(2, '=');
            matches!((it.next(), it.next()), (Some(k), Some(v)) if ident(k) && ident(v))
        })
    };
    let mut lines = text.lines();
    let Some(head) = lines.next() else {
        return false;
    };
    let Some(name) = head
        .strip_prefix("digraph ")
        .and_then(|s| s.strip_suffix(" {"))
    else {
        return false;
    };
    if !ident(name) || !text.ends_with("}\n") {
        return false;
    }
    let body: Vec<&str> = lines.collect();
    let (last, stmts) = body.split_last().unwrap();
    if *last != "}" {
        return false;
    }
    stmts.iter().all(|line| {
        let Some(stmt) = line.trim().strip_suffix(';') else {
            return false;
        };
        let (target, rest) = match stmt.find(" [") {
            Some(k) => (&stmt[..k], Some(stmt[k + 1..].trim())),
            None => (stmt, None),
        };
        let target_ok = match target.split_once(" -> ") {
            Some((a, b)) => ident(a) && ident(b),
            None => ident(target),
        };
        target_ok && rest.is_none_or(attrs)
    })
}
