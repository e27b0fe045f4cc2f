package svc;

public class Mailer {
    public void send(String to) {
    }

    public void notifyAdmin() {
        send("admin");
    }
}
