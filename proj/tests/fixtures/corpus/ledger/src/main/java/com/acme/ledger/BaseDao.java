package com.acme.ledger;

public abstract class BaseDao {
    public abstract void write(String entry);

    public String tableName() {
        return getClass().getSimpleName().toLowerCase();
    }
}
