package com.acme.ledger;

public class LedgerService {
    private final BaseDao dao;
    private final Clock clock;

    public LedgerService(BaseDao dao, Clock clock) {
        this.dao = dao;
        this.clock = clock;
    }

    public void record(String entry) {
        dao.write(clock.now() + " " + entry);
    }
}
