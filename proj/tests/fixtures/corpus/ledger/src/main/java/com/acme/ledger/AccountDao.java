package com.acme.ledger;

public class AccountDao extends BaseDao {
    @Override
    public void write(String entry) {
        System.out.println("account " + entry);
    }
}
