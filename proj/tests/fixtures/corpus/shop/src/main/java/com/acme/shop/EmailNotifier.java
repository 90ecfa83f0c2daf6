package com.acme.shop;

public class EmailNotifier implements Notifier {
    private String sender = "orders@acme.com";

    @Override
    public void send(String message) {
        System.out.println(sender + ": " + message);
    }
}
