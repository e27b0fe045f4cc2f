package svc;

public class Mailer {
    public void send(String to, boolean urgent) {
    }

    public void notifyAdmin() {
        send("admin", false);
    }
}
